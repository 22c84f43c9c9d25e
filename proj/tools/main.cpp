// Command-line front end: piece enumeration, verification sweeps, the
// completion atlas, and the finite-field model cross-checks.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gsp/errors.hpp"
#include "gsp/serialize.hpp"

using namespace gsp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_delta(const std::string& spec) {
    std::vector<int> out;
    if (spec.empty()) return out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok) - 1);
    return out;
}

NodeSet parse_nodes(const std::string& spec) {
    NodeSet out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out = out.with(std::stoi(tok) - 1);
    }
    return out;
}

WeylElement parse_word(const WeylDatum& d, const std::string& spec) {
    if (spec.empty() || spec == "e" || spec == "id") return d.identity();
    if (spec == "w0") return d.longest();
    std::vector<int> letters;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        if (cur[0] == 's' || cur[0] == 'S') cur = cur.substr(1);
        letters.push_back(std::stoi(cur) - 1);
        cur.clear();
    };
    for (char c : spec) {
        if (c == ' ' || c == ',' || c == '*') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return d.from_word(letters);
}

void emit(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
    } else {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw Error("cannot open output file " + path);
        os << content;
    }
}

struct PiecesArgs {
    std::string type, delta, J, y, format = "text", out;
    bool J_given = false, y_given = false;
    int torus_rank = -1;
};

int run_pieces(const PiecesArgs& args) {
    auto W = build_weyl(args.type, parse_delta(args.delta), args.torus_rank);
    std::vector<std::pair<NodeSet, WeylElement>> pairs;
    if (args.J_given && args.y_given) {
        pairs.emplace_back(parse_nodes(args.J), parse_word(*W, args.y));
    } else {
        std::vector<NodeSet> Js;
        if (args.J_given)
            Js.push_back(parse_nodes(args.J));
        else
            Js = subsets_of(W->all_nodes());
        for (NodeSet J : Js)
            for (const auto& y : valid_twists(*W, J)) pairs.emplace_back(J, y);
    }

    Json jpairs = Json::array();
    std::ostringstream text;
    for (const auto& [J, y] : pairs) {
        TwistedPair tp = make_twisted_pair(*W, J, y);  // throws InvalidTwistedPair -> exit 2
        auto pieces = enumerate_pieces(tp);
        Json jp{{"J", json_node_set(tp.J)},
                {"Jprime", json_node_set(tp.Jp)},
                {"y", json_element(tp.y)},
                {"pieces", Json::array()}};
        text << "Z(J=" << tp.J.str() << ", y=" << tp.y.str() << ")  J'=" << tp.Jp.str() << "  "
             << pieces.size() << " pieces\n";
        for (const auto& p : pieces) {
            jp["pieces"].push_back(json_descriptor(p));
            text << "  " << text_descriptor(p) << '\n';
        }
        jpairs.push_back(std::move(jp));
    }
    if (args.format == "json")
        emit(Json{{"pairs", jpairs}}.dump(2) + "\n", args.out);
    else
        emit(text.str(), args.out);
    return kExitOk;
}

struct VerifyArgs {
    std::string type, delta, format = "text", out;
};

int run_verify(const VerifyArgs& args) {
    auto W = build_weyl(args.type, parse_delta(args.delta));
    bool all_ok = true;
    Json results = Json::array();
    std::ostringstream text;
    for (NodeSet J : subsets_of(W->all_nodes())) {
        for (const auto& y : valid_twists(*W, J)) {
            TwistedPair tp = make_twisted_pair(*W, J, y);
            SumCheck check = verify_sum(tp);
            all_ok = all_ok && check.ok;
            results.push_back(json_sum_check(tp, check));
            text << (check.ok ? "ok   " : "FAIL ") << "J=" << tp.J.str() << " y=" << tp.y.str()
                 << "  sum=" << check.lhs.str() << "  poincare=" << check.rhs.str() << '\n';
        }
    }
    text << (all_ok ? "all pairs verified\n" : "verification FAILED\n");
    if (args.format == "json")
        emit(Json{{"results", results}, {"ok", all_ok}}.dump(2) + "\n", args.out);
    else
        emit(text.str(), args.out);
    return all_ok ? kExitOk : kExitVerificationFailed;
}

struct GlcheckArgs {
    int d = 2, q = 2;
    std::string mode = "10.2", J, sigma, json_out;
    bool J_given = false;
};

int run_glcheck(const GlcheckArgs& args) {
    ModelConfig cfg;
    cfg.d = args.d;
    cfg.q = args.q;
    if (args.mode == "10.2") {
        cfg.mode = ModelMode::LineLine;
    } else if (args.mode == "10.3") {
        cfg.mode = ModelMode::LineHyperplane;
    } else if (args.mode == "full") {
        cfg.mode = ModelMode::Full;
        if (!args.J_given) throw Error("--mode full requires --J");
        cfg.J = parse_nodes(args.J);
        if (!args.sigma.empty())
            for (int v : parse_delta(args.sigma)) cfg.sigma.push_back(v);
    } else {
        throw Error("--mode must be one of 10.2, 10.3, full");
    }
    ModelReport rep = run_model(cfg);
    Json j = json_model_report(rep, args.mode);
    if (!args.json_out.empty()) emit(j.dump(2) + "\n", args.json_out);
    std::cout << "buckets:";
    for (const auto& b : rep.buckets) std::cout << ' ' << b.size;
    std::cout << "  total: " << rep.total << "  verdict: " << (rep.pass ? "pass" : "fail") << '\n';
    return rep.pass ? kExitOk : kExitVerificationFailed;
}

struct WonderfulArgs {
    std::string type, delta, csv_out, json_out;
};

int run_wonderful(const WonderfulArgs& args) {
    auto W = build_weyl(args.type, parse_delta(args.delta));
    CompletionAtlas atlas = build_atlas(*W);
    if (!args.csv_out.empty()) emit(csv_atlas(atlas), args.csv_out);
    if (!args.json_out.empty()) emit(json_atlas(atlas).dump(2) + "\n", args.json_out);
    if (args.csv_out.empty() && args.json_out.empty()) emit(text_atlas(atlas), "");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"G-stable pieces of parabolic double-coset varieties and their completion"};
    app.require_subcommand(1);

    PiecesArgs pa;
    auto* pieces = app.add_subcommand("pieces", "enumerate piece descriptors of Z(J, y)");
    pieces->add_option("--type", pa.type, "Cartan type, e.g. A2, B3, A1xA1")->required();
    pieces->add_option("--delta", pa.delta, "diagram automorphism as 1-based image list");
    pieces->add_option("--J", pa.J, "node subset, e.g. \"1,2\" (omit to sweep)");
    pieces->add_option("--y", pa.y, "twist as a reduced word, e.g. \"s1 s2\", or e/w0");
    pieces->add_option("--torus-rank", pa.torus_rank, "ambient torus rank (default: rank)");
    pieces->add_option("--format", pa.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    pieces->add_option("--out", pa.out, "output path (default: stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check the point-count identity for all (J, y)");
    verify->add_option("--type", va.type)->required();
    verify->add_option("--delta", va.delta);
    verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", va.out);

    GlcheckArgs ga;
    auto* glcheck = app.add_subcommand("glcheck", "exhaustive finite-field model comparison");
    glcheck->add_option("--d", ga.d, "ambient dimension")->required();
    glcheck->add_option("--q", ga.q, "field size (small prime)")->required();
    glcheck->add_option("--mode", ga.mode, "10.2, 10.3 or full")->required();
    glcheck->add_option("--J", ga.J, "full mode: type of the first filtration");
    glcheck->add_option("--sigma", ga.sigma, "full mode: 1-based block permutation");
    glcheck->add_option("--json", ga.json_out, "write the JSON report here");

    WonderfulArgs wa;
    auto* wonderful = app.add_subcommand("wonderful", "piece atlas of the completion");
    wonderful->add_option("--type", wa.type)->required();
    wonderful->add_option("--delta", wa.delta);
    wonderful->add_option("--csv", wa.csv_out, "write the atlas as CSV here");
    wonderful->add_option("--json", wa.json_out, "write the atlas as JSON here");

    try {
        app.parse(argc, argv);
        pa.J_given = pieces->count("--J") > 0;
        pa.y_given = pieces->count("--y") > 0;
        ga.J_given = glcheck->count("--J") > 0;
        if (*pieces) return run_pieces(pa);
        if (*verify) return run_verify(va);
        if (*glcheck) return run_glcheck(ga);
        if (*wonderful) return run_wonderful(wa);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const InvalidTwistedPair& e) {
        std::cerr << "invalid (J, y) pair: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NonFiniteType& e) {
        std::cerr << "invalid type: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidAutomorphism& e) {
        std::cerr << "invalid delta: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TooLarge& e) {
        std::cerr << "configuration too large: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvariantBreach& e) {
        std::cerr << "internal invariant breach: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const NoStabilization& e) {
        std::cerr << "stabilization guard violated: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const NonDivisible& e) {
        std::cerr << "divisibility failure: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
