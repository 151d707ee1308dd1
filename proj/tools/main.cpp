// Command-line front end: quandle checks, homology groups, colorings and
// their homology classes, and the three diagram comparison procedures.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qh/applications.hpp"
#include "qh/coloring.hpp"
#include "qh/diagram.hpp"
#include "qh/homology.hpp"
#include "qh/quandle.hpp"

using namespace qh;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Diagram load_diagram(const std::string& path) { return Diagram::parse(slurp(path)); }

json int_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json class_json(const HomologyClass& c) {
    json fr = json::array(), to = json::array();
    for (const auto& v : c.free_coords) fr.push_back(int_json(v));
    for (const auto& v : c.torsion_coords) to.push_back(int_json(v));
    return {{"free", fr}, {"torsion", to}};
}

json coloring_json(const Coloring& c) {
    json j = json::object();
    for (const auto& [arc, color] : c) j[std::to_string(arc)] = color;
    return j;
}

int cmd_quandle_verify(const std::string& spec, bool as_json) {
    Quandle q = resolve_quandle(spec);
    AxiomReport rep = verify_axioms(q.table());
    if (as_json) {
        json j = {{"name", q.name()}, {"order", q.order()}, {"passed", rep.passed},
                  {"orbits", q.orbits().size()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << q.name() << ": order " << q.order() << ", " << q.orbits().size()
                  << " orbit(s), axioms " << (rep.passed ? "OK" : "FAILED") << "\n";
    }
    return rep.passed ? 0 : 1;
}

int cmd_homology(const std::string& spec, const std::string& theory_s, int degree,
                 bool as_json) {
    Quandle q = resolve_quandle(spec);
    HomologyPresentation pres(q, theory_from_string(theory_s), degree);
    if (as_json) {
        json tors = json::array();
        for (const auto& d : pres.torsion()) tors.push_back(int_json(d));
        json j = {{"quandle", q.name()}, {"theory", theory_s}, {"degree", degree},
                  {"free_rank", pres.free_rank()}, {"torsion", tors},
                  {"group", pres.group_to_string()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << pres.group_to_string() << "\n";
    }
    return 0;
}

int cmd_colorings(const std::string& qspec, const std::string& dpath, const std::string& mode,
                  bool as_json) {
    Quandle q = resolve_quandle(qspec);
    Diagram d = load_diagram(dpath);
    bool shadow = mode == "shadow";
    HomologyPresentation pres(q, Theory::quandle, shadow ? 3 : 2);
    json report = json::array();
    std::ostringstream text;
    long n = 0;
    if (d.is_tangle()) {
        if (shadow) {
            for (const auto& s : enumerate_boundary_mono_shadow(d, q)) {
                auto cls = tangle_shadow_class(d, q, s, pres);
                json regions = json::object();
                for (int r = 0; r < int(s.regions.size()); ++r)
                    regions[std::to_string(r)] = s.regions[r];
                report.push_back({{"arcs", coloring_json(s.arcs)}, {"regions", regions},
                                  {"class", class_json(cls)}});
                text << "arcs " << coloring_json(s.arcs).dump() << " regions "
                     << regions.dump() << " class " << cls.to_string() << "\n";
                ++n;
            }
        } else {
            for (const auto& c : enumerate_boundary_mono(d, q)) {
                auto cls = tangle_class(d, q, c, pres);
                report.push_back({{"arcs", coloring_json(c)}, {"class", class_json(cls)}});
                text << "arcs " << coloring_json(c).dump() << " class " << cls.to_string()
                     << "\n";
                ++n;
            }
        }
    } else if (shadow) {
        for (const auto& s : enumerate_shadow(d, q)) {
            auto cls = pres.reduce_cycle(shadow_cycle(d, q, s));
            json regions = json::object();
            for (int r = 0; r < int(s.regions.size()); ++r)
                regions[std::to_string(r)] = s.regions[r];
            report.push_back({{"arcs", coloring_json(s.arcs)}, {"regions", regions},
                              {"class", class_json(cls)}});
            text << "arcs " << coloring_json(s.arcs).dump() << " regions " << regions.dump()
                 << " class " << cls.to_string() << "\n";
            ++n;
        }
    } else {
        for (const auto& c : enumerate_colorings(d, q)) {
            auto cls = pres.reduce_cycle(coloring_cycle(d, q, c));
            report.push_back({{"arcs", coloring_json(c)}, {"class", class_json(cls)}});
            text << "arcs " << coloring_json(c).dump() << " class " << cls.to_string() << "\n";
            ++n;
        }
    }
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << n << " coloring(s)\n" << text.str();
    return 0;
}

int cmd_class(const std::string& qspec, const std::string& theory_s, int degree,
              const std::string& chain_path, bool as_json) {
    Quandle q = resolve_quandle(qspec);
    HomologyPresentation pres(q, theory_from_string(theory_s), degree);
    Chain z = chain_from_text(slurp(chain_path));
    HomologyClass cls = pres.reduce_cycle(z);
    if (as_json) {
        json j = {{"group", pres.group_to_string()}, {"class", class_json(cls)},
                  {"zero", cls.is_zero()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group " << pres.group_to_string() << "\nclass " << cls.to_string()
                  << (cls.is_zero() ? " (zero)" : "") << "\n";
    }
    return 0;
}

std::vector<int> parse_primes(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quandle homology of links and tangles"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string quandle_spec = "R3", theory_s = "quandle", diagram_path, diagram_path2,
                chain_path, mode = "plain", primes_s = "2,3,5,7";
    int degree = 2;

    auto* verify = app.add_subcommand("quandle-verify", "check the quandle axioms");
    verify->add_option("--quandle", quandle_spec, "builtin name (R2..R30) or file")->required();

    auto* hom = app.add_subcommand("homology", "homology group of a finite quandle");
    hom->add_option("--quandle", quandle_spec)->required();
    hom->add_option("--theory", theory_s, "rack | degenerate | quandle");
    hom->add_option("--degree", degree)->required();

    auto* col = app.add_subcommand("colorings", "enumerate colorings and their classes");
    col->add_option("--quandle", quandle_spec)->required();
    col->add_option("--diagram", diagram_path)->required();
    col->add_option("--mode", mode, "plain | shadow");

    auto* cls = app.add_subcommand("class", "reduce a cycle to canonical coordinates");
    cls->add_option("--quandle", quandle_spec)->required();
    cls->add_option("--theory", theory_s);
    cls->add_option("--degree", degree)->required();
    cls->add_option("--chain", chain_path, "chain text file")->required();

    auto* obs = app.add_subcommand("tangle-obstruction", "tangle embedding obstruction");
    obs->add_option("--quandle", quandle_spec)->required();
    obs->add_option("--tangle", diagram_path)->required();
    obs->add_option("--link", diagram_path2)->required();
    obs->add_option("--mode", mode, "plain | shadow");

    auto* fmb = app.add_subcommand("four-move-bound", "4-move distance lower bound over R4");
    fmb->add_option("--first", diagram_path)->required();
    fmb->add_option("--second", diagram_path2)->required();

    auto* per = app.add_subcommand("periodicity", "excluded prime periods");
    per->add_option("--quandle", quandle_spec)->required();
    per->add_option("--diagram", diagram_path)->required();
    per->add_option("--mode", mode, "plain | shadow");
    per->add_option("--primes", primes_s, "comma-separated primes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mode != "plain" && mode != "shadow")
            throw std::runtime_error("mode must be plain or shadow");
        if (verify->parsed()) return cmd_quandle_verify(quandle_spec, as_json);
        if (hom->parsed()) return cmd_homology(quandle_spec, theory_s, degree, as_json);
        if (col->parsed()) return cmd_colorings(quandle_spec, diagram_path, mode, as_json);
        if (cls->parsed()) return cmd_class(quandle_spec, theory_s, degree, chain_path, as_json);
        if (obs->parsed()) {
            auto rep = tangle_obstruction(load_diagram(diagram_path), load_diagram(diagram_path2),
                                          resolve_quandle(quandle_spec), mode == "shadow");
            std::cout << (as_json ? rep.to_json() + "\n" : rep.to_text());
            return rep.obstructed ? 2 : 0;
        }
        if (fmb->parsed()) {
            auto rep = four_move_bound(load_diagram(diagram_path), load_diagram(diagram_path2));
            std::cout << (as_json ? rep.to_json() + "\n" : rep.to_text());
            return (rep.infinite || rep.bound > 0) ? 2 : 0;
        }
        if (per->parsed()) {
            auto rep = periodicity_candidates(load_diagram(diagram_path),
                                              resolve_quandle(quandle_spec), mode == "shadow",
                                              parse_primes(primes_s));
            std::cout << (as_json ? rep.to_json() + "\n" : rep.to_text());
            return rep.any_excluded() ? 2 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
