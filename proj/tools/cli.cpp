// Command-line front end: fair necklace splitting, splitting verification,
// the orientation/chain-map property suites, and the pairing-ladder report.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "polytopal/dold.hpp"
#include "polytopal/json_io.hpp"
#include "polytopal/necklace.hpp"
#include "polytopal/propsuite.hpp"

using namespace polytopal;

namespace {

std::string read_arg_or_file(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument("cannot open " + arg.substr(1));
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return arg;
}

void print_splitting(const Necklace& nk, const Splitting& s) {
    std::cout << "necklace: " << nk.beads << "\n";
    for (const Segment& seg : s.segments) {
        std::cout << "  beads " << seg.begin + 1 << ".." << seg.end << " ("
                  << nk.beads.substr(seg.begin, seg.end - seg.begin) << ") -> thief " << seg.owner
                  << "\n";
    }
    auto cuts = s.interior_cuts();
    std::cout << "interior cuts:";
    for (int c : cuts) std::cout << " " << c;
    if (cuts.empty()) std::cout << " none";
    std::cout << "\n";
}

void print_report(const Necklace& nk, const SplitReport& rep, int q) {
    std::cout << "type  per-thief counts (fair range)\n";
    for (int i = 0; i < nk.t; ++i) {
        std::cout << "  " << nk.labels[i] << "   ";
        for (int r = 0; r < q; ++r) std::cout << rep.counts[i][r] << " ";
        std::cout << " (" << nk.counts[i] / q << ".." << (nk.counts[i] + q - 1) / q << ")\n";
    }
    std::cout << "interior cuts: " << rep.interior_cut_count << " (budget " << nk.t * (q - 1)
              << ")\n";
    std::cout << (rep.ok() ? "OK: fair and within budget" : "FAIL") << "\n";
    if (!rep.covers) std::cout << "  segments do not partition the necklace\n";
    for (auto& [type, thief] : rep.unfair)
        std::cout << "  unfair: type " << nk.labels[type] << ", thief " << thief << "\n";
    if (!rep.within_budget) std::cout << "  cut budget exceeded\n";
}

int run(int argc, char** argv) {
    CLI::App app{"polytopal chain complexes and fair necklace splitting"};
    app.require_subcommand(1);

    // ---- split ----
    auto* split = app.add_subcommand("split", "compute a fair splitting");
    std::string split_necklace;
    int split_thieves = 2;
    std::string split_method = "chain";
    bool split_json = false, split_parallel = false;
    split->add_option("--necklace", split_necklace, "bead string or {\"beads\":[...]} JSON")
        ->required();
    split->add_option("--thieves", split_thieves, "number of thieves q >= 2")->required();
    split->add_option("--method", split_method, "chain|brute")
        ->check(CLI::IsMember({"chain", "brute"}));
    split->add_flag("--json", split_json, "emit JSON");
    split->add_flag("--parallel", split_parallel, "parallel witness scan (same output)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "verify a proposed splitting");
    std::string verify_necklace, verify_splitting_arg;
    int verify_thieves = 2;
    bool verify_json = false;
    verify->add_option("--necklace", verify_necklace, "bead string or JSON")->required();
    verify->add_option("--thieves", verify_thieves, "number of thieves")->required();
    verify
        ->add_option("--splitting", verify_splitting_arg,
                     "splitting JSON {\"cuts\":[...],\"owners\":[...]} or @file")
        ->required();
    verify->add_flag("--json", verify_json, "emit JSON");

    // ---- check-invariants ----
    auto* inv = app.add_subcommand("check-invariants", "run the property suites");
    std::uint64_t inv_seed = 20240601;
    int inv_max_dim = 4;
    inv->add_option("--seed", inv_seed, "random seed");
    inv->add_option("--max-dim", inv_max_dim, "largest constructor dimension")
        ->check(CLI::Range(0, 6));

    // ---- dold-verify ----
    auto* dold = app.add_subcommand("dold-verify", "run the pairing ladder");
    int dn = 2, dt = 1, dp = 2;
    bool dold_json = false;
    dold->add_option("--n", dn, "number of beads")->required();
    dold->add_option("--types", dt, "number of bead types")->required();
    dold->add_option("--prime", dp, "prime number of thieves")->required();
    dold->add_flag("--json", dold_json, "emit JSON");

    // ---- demo ----
    app.add_subcommand("demo", "multiplicity-2 wrap and the cubical/polytopal separation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (split->parsed()) {
        Necklace nk = necklace_from_arg(split_necklace);
        SplitOptions opts;
        opts.method = split_method == "brute" ? SplitMethod::Brute : SplitMethod::Chain;
        opts.parallel = split_parallel;
        SplitOutcome out = find_fair_split(nk, split_thieves, opts);
        if (out.used_fallback)
            std::cerr << "note: composite recursion fell back to exhaustive search\n";
        if (split_json) {
            std::cout << splitting_to_json(out.splitting).dump(2) << "\n";
        } else {
            print_splitting(nk, out.splitting);
            SplitReport rep = verify_splitting(nk, out.splitting, split_thieves);
            print_report(nk, rep, split_thieves);
        }
        return 0;
    }

    if (verify->parsed()) {
        Necklace nk = necklace_from_arg(verify_necklace);
        Json j = Json::parse(read_arg_or_file(verify_splitting_arg));
        Splitting s = splitting_from_json(j, nk.n, verify_thieves);
        SplitReport rep = verify_splitting(nk, s, verify_thieves);
        if (verify_json)
            std::cout << split_report_to_json(rep, nk, verify_thieves).dump(2) << "\n";
        else
            print_report(nk, rep, verify_thieves);
        return rep.ok() ? 0 : 1;
    }

    if (inv->parsed()) {
        std::vector<std::string> fails = run_invariant_suite(inv_seed, inv_max_dim);
        if (fails.empty()) {
            std::cout << "all invariants hold (seed " << inv_seed << ", max dim " << inv_max_dim
                      << ")\n";
            return 0;
        }
        for (auto& f : fails) std::cout << "FAIL " << f << "\n";
        return 1;
    }

    if (dold->parsed()) {
        if (dt < 1 || dn < dt) throw std::invalid_argument("need 1 <= types <= n");
        std::string beads;
        for (int k = 0; k < dn; ++k) beads.push_back(static_cast<char>('a' + k % dt));
        NecklaceSetup st = make_setup(Necklace::from_string(beads), dp);
        PairingReport rep = verify_pairing(st);
        if (dold_json) {
            std::cout << pairing_report_to_json(rep).dump(2) << "\n";
        } else {
            std::cout << "pairing ladder for n=" << dn << " t=" << dt << " p=" << dp << "\n";
            for (const PairingRung& r : rep.rungs)
                std::cout << "  " << (r.even ? "even" : "odd ") << " rung l=" << r.l << " degree "
                          << r.degree << ": residue " << r.residue << " expected " << r.expected
                          << (r.ok ? "  ok" : "  MISMATCH") << "\n";
            std::cout << "  final residue " << rep.final_residue << ", top chain image "
                      << (rep.top_nonzero ? "nonzero" : "ZERO") << ", witness faces "
                      << rep.witness_faces << "\n";
            std::cout << "  wall " << rep.wall_ms << " ms\n";
            std::cout << (rep.ok() ? "OK" : "FAIL") << "\n";
        }
        return rep.ok() ? 0 : 1;
    }

    // demo
    {
        std::cout << "1. A degree-2 polygonal wrap\n";
        std::vector<Coords> verts = {
            {Rational(2), Rational(0)},   {Rational(1), Rational(2)},   {Rational(-1), Rational(2)},
            {Rational(-2), Rational(0)},  {Rational(-1), Rational(-2)}, {Rational(1), Rational(-2)}};
        std::vector<std::pair<Face, std::vector<Face>>> lattice;
        for (VertexId v = 0; v < 6; ++v) lattice.push_back({Face{v}, {}});
        std::vector<Face> edges;
        for (VertexId v = 0; v < 6; ++v) edges.push_back(sorted_face({v, (v + 1) % 6}));
        for (auto& e : edges) lattice.push_back({e, {Face{e[0]}, Face{e[1]}}});
        lattice.push_back({Face{0, 1, 2, 3, 4, 5}, edges});
        auto hex = std::make_shared<ExplicitComplex>(verts, lattice);
        auto tri = make_simplex(2);
        PolytopalMap wrap = PolytopalMap::from_table(hex, tri, {0, 1, 2, 0, 1, 2});
        auto cm = induce_chain_map(wrap);
        Chain top = cm->apply_face(Face{0, 1, 2, 3, 4, 5});
        std::cout << "   hexagon -> triangle, vertices 1..6 -> a,b,c,a,b,c\n";
        std::cout << "   the 2-face maps onto the triangle with multiplicity "
                  << top.terms.begin()->second << "\n\n";

        std::cout << "2. A cubical map that is not polytopal\n";
        auto c3 = make_cube(3);
        auto c4 = make_cube(4);
        std::vector<VertexId> table(8);
        auto set = [&](int x, int y, int z, int a, int b, int c, int d) {
            table[x + 2 * y + 4 * z] = a + 2 * b + 4 * c + 8 * d;
        };
        set(0, 0, 0, 0, 0, 0, 0);
        set(1, 0, 0, 1, 0, 0, 0);
        set(0, 1, 0, 0, 1, 0, 0);
        set(1, 1, 0, 0, 0, 0, 0);
        set(0, 0, 1, 0, 0, 0, 1);
        set(1, 0, 1, 0, 0, 0, 0);
        set(0, 1, 1, 0, 0, 0, 0);
        set(1, 1, 1, 0, 0, 1, 0);
        PolytopalMap m = PolytopalMap::from_table(c3, c4, table);
        std::cout << "   3-cube -> 4-cube, adjacent vertices stay adjacent or equal\n";
        std::cout << "   classical cubical condition: " << (feh_cubical_ok(m) ? "accepted" : "rejected")
                  << "\n";
        auto viols = validate_polytopal(m);
        std::cout << "   dimension-drop condition:    "
                  << (viols.empty() ? "accepted" : "rejected") << "\n";
        for (auto& v : viols)
            if (v.face.size() == 8)
                std::cout << "   (the 3-cube's image spans a face of dimension " << v.min_face_dim
                          << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
