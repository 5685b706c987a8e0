#include "skewcalc/oracle.hpp"
#include "skewcalc/pipeline.hpp"
#include "skewcalc/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using skewcalc::json;

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

unsigned long long seed_from_env(unsigned long long fallback) {
    const char* env = std::getenv("SKEWCALC_SEED");
    if (!env || !*env) return fallback;
    return std::strtoull(env, nullptr, 10);
}

void emit(const json& j, const std::string& output) {
    std::string text = j.dump(2);
    if (output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(output);
        if (!os) throw std::invalid_argument("cannot open output file " + output);
        os << text << "\n";
    }
}

json load_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

int run_count_cmd(int ambient, long degree, long genus, bool emit_intermediates,
                  const std::string& output) {
    if (ambient != 3 && ambient != 4)
        throw CLI::ValidationError("count", "--ambient must be 3 or 4");
    json j = skewcalc::count_report(ambient, degree, genus, emit_intermediates);
    emit(j, output);
    return 0;
}

int run_classify_cmd(bool show_candidates, const std::string& output) {
    emit(skewcalc::classify_report(show_candidates), output);
    return 0;
}

int run_oracle_cmd(const std::string& mode, const std::string& curve_path,
                   const std::string& scroll_path, const std::string& t_str,
                   const std::string& s_str, const std::string& t0_str, int samples,
                   unsigned long long seed, const std::string& output) {
    json j;
    j["schema"] = 1;
    j["command"] = "oracle";
    j["mode"] = mode;
    if (mode == "count-pairs" || mode == "check-skew") {
        skewcalc::RationalCurve curve = skewcalc::curve_from_json(load_json(curve_path));
        skewcalc::PairCount pc = skewcalc::count_nonskew_pairs_p4(curve, seed);
        j["pairs"] = skewcalc::to_json(pc);
        j["skew"] = (pc.ordered_count == 0);
    } else if (mode == "tangent-meet") {
        skewcalc::RationalCurve curve = skewcalc::curve_from_json(load_json(curve_path));
        skewcalc::Rat t = skewcalc::parse_rational(t_str);
        skewcalc::Rat s = skewcalc::parse_rational(s_str);
        j["t"] = t_str;
        j["s"] = s_str;
        j["meet"] = skewcalc::tangent_meet(curve, t, s);
    } else if (mode == "scroll-test") {
        skewcalc::ScrollSpec spec = skewcalc::scroll_from_json(load_json(scroll_path));
        j.update(skewcalc::to_json(skewcalc::scroll_skew_test(spec, seed)));
    } else if (mode == "contact-test") {
        skewcalc::RationalCurve curve = skewcalc::curve_from_json(load_json(curve_path));
        skewcalc::ContactOrderReport rep =
            skewcalc::contact_order_test(curve, skewcalc::parse_rational(t0_str));
        j["t0"] = t0_str;
        j["matched_orders"] = rep.matched_orders;
        j["third_order_obstructed"] = rep.third_order_obstructed;
    } else if (mode == "veronese-test") {
        j["samples"] = samples;
        j["skew_samples_ok"] = skewcalc::veronese_sample_test(samples, seed);
    } else {
        throw CLI::ValidationError("oracle", "unknown --mode " + mode);
    }
    emit(j, output);
    return 0;
}

int run_chow_cmd(const std::string& expr_path, int n, int N, const std::string& output) {
    using namespace skewcalc;
    GrassContext ctx(n, N);
    std::ifstream is(expr_path);
    if (!is) throw std::invalid_argument("cannot open " + expr_path);

    auto parse_partition = [&](const std::string& tok) -> Partition {
        auto lb = tok.find('['), rb = tok.find(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            throw std::invalid_argument("expected sigma[a,b,...], got '" + tok + "'");
        std::vector<int> parts;
        std::stringstream ss(tok.substr(lb + 1, rb - lb - 1));
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            if (!piece.empty()) parts.push_back(std::stoi(piece));
        }
        return Partition(parts);
    };

    auto named_class = [&](const std::string& tok) -> BlowupClass {
        if (tok == "E") return BlowupClass::E(ctx);
        if (tok == "D1") return BlowupClass::pi_star(class_D1(ctx));
        if (tok == "D1_tilde") return class_D1_tilde(ctx).cls;
        if (tok == "Gamma_tilde") return class_Gamma_tilde(ctx);
        if (tok.rfind("sigma", 0) == 0) {
            auto x = tok.find('x');
            if (x != std::string::npos && tok.find("sigma", x) != std::string::npos) {
                Partition a = parse_partition(tok.substr(0, x));
                Partition b = parse_partition(tok.substr(x + 1));
                return BlowupClass::pi_star(TensorClass::term(ctx, a, b));
            }
            return BlowupClass::pi_star(
                i_pushforward(ChowClass::sigma(ctx, parse_partition(tok))));
        }
        throw std::invalid_argument("unknown identifier '" + tok + "'");
    };

    json lines = json::array();
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string op;
        ls >> op;
        if (op.empty() || op[0] == '#') continue;
        json entry;
        entry["expr"] = line;
        if (op == "mul") {
            std::string a, b;
            ls >> a >> b;
            BlowupClass r = mult_B(named_class(a), named_class(b));
            entry["normal_form"] = r.str();
            if (auto w = as_exceptional(r)) entry["as_j_star"] = "j*( " + w->str() + " )";
            entry["value"] = to_json(r);
        } else if (op == "push") {
            std::string a;
            ls >> a;
            TensorClass r = i_pushforward(ChowClass::sigma(ctx, parse_partition(a)));
            entry["result"] = r.str();
            entry["value"] = to_json(r);
        } else if (op == "pull") {
            std::string a;
            ls >> a;
            auto x = a.find('x');
            if (x == std::string::npos)
                throw std::invalid_argument("pull expects sigma[..]xsigma[..]");
            ChowClass r = i_pullback(TensorClass::term(ctx, parse_partition(a.substr(0, x)),
                                                       parse_partition(a.substr(x + 1))));
            entry["result"] = r.str();
            entry["value"] = to_json(r);
        } else {
            throw std::invalid_argument("unknown operation '" + op + "'");
        }
        lines.push_back(std::move(entry));
        std::cout << lines.back()["expr"].get<std::string>() << " => ";
        if (lines.back().contains("as_j_star"))
            std::cout << lines.back()["as_j_star"].get<std::string>() << "\n";
        else if (lines.back().contains("normal_form"))
            std::cout << lines.back()["normal_form"].get<std::string>() << "\n";
        else
            std::cout << lines.back()["result"].get<std::string>() << "\n";
    }
    if (!output.empty()) {
        json j;
        j["schema"] = 1;
        j["command"] = "chow";
        j["ctx"] = {n, N};
        j["results"] = std::move(lines);
        emit(j, output);
    }
    return 0;
}

int run_scroll_cmd(long d1, long d2, int ambient, long genus, const std::string& output) {
    using namespace skewcalc;
    json j;
    j["schema"] = 1;
    j["command"] = "scroll";
    j["bidegree"] = {d1, d2};
    j["genus"] = genus;
    long deg = scroll_degree(d1, d2);
    j["degree"] = deg;
    if (ambient == 3) {
        auto [A, B] = p3_intersection();
        Int a = A.eval(0, genus, deg), b = B.eval(0, genus, deg);
        j["intersection_coefficients"] = {a.str(), b.str()};
        j["skew_requires_genus_zero"] = true;
        j["skew_possible"] = (genus == 0);
    } else if (ambient == 4) {
        ParamPoly count = p4_scroll_count();
        Int val = count.eval(0, genus, deg);
        j["count_symbolic"] = count.str();
        j["count"] = val.str();
        j["skew"] = (val == 0);
    } else {
        throw CLI::ValidationError("scroll", "--ambient must be 3 or 4");
    }
    emit(j, output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-theory calculator for skew curves and line families"};
    app.require_subcommand(1);

    int ambient = 4;
    long degree = 4, genus = 0;
    bool emit_intermediates = false;
    bool show_candidates = false;
    std::string output, curve_path, scroll_path, mode = "count-pairs";
    std::string t_str = "0", s_str = "1", t0_str = "0";
    int samples = 100;
    unsigned long long seed = seed_from_env(skewcalc::kDefaultSeed);
    int n = 2, N = 4;
    long d1 = 1, d2 = 1;

    auto* count = app.add_subcommand("count", "nonskew tangent-pair count for a curve in P^3/P^4");
    count->add_option("--ambient", ambient, "projective ambient dimension (3 or 4)");
    count->add_option("--degree", degree, "curve degree")->required();
    count->add_option("--genus", genus, "curve genus")->required();
    count->add_flag("--emit-intermediates", emit_intermediates, "include every intermediate class");
    count->add_option("--output", output, "write the JSON report to a file");

    auto* classify = app.add_subcommand("classify", "algebraically skew curves in P^4");
    classify->add_flag("--show-candidates", show_candidates, "include excluded candidates");
    classify->add_option("--output", output, "write the JSON report to a file");

    auto* oracle = app.add_subcommand("oracle", "exact brute-force verification on explicit curves");
    oracle->add_option("--mode", mode,
                       "count-pairs | check-skew | tangent-meet | scroll-test | contact-test | "
                       "veronese-test");
    oracle->add_option("--curve", curve_path, "curve JSON file");
    oracle->add_option("--scroll", scroll_path, "scroll JSON file");
    oracle->add_option("--t", t_str, "first parameter (rational)");
    oracle->add_option("--s", s_str, "second parameter (rational)");
    oracle->add_option("--t0", t0_str, "contact point parameter (rational)");
    oracle->add_option("--samples", samples, "sample count for veronese-test");
    oracle->add_option("--seed", seed, "seed (overrides SKEWCALC_SEED)");
    oracle->add_option("--output", output, "write the JSON report to a file");

    auto* chow = app.add_subcommand("chow", "evaluate blowup Chow-ring expressions from a file");
    chow->add_option("expr", curve_path, "expression file")->required();
    chow->add_option("--n", n, "subspace dimension (vector convention)");
    chow->add_option("--N", N, "ambient vector-space dimension");
    chow->add_option("--output", output, "write the JSON report to a file");

    auto* scroll = app.add_subcommand("scroll", "scroll degree and skewness criteria");
    scroll->add_option("--d1", d1, "first bidegree")->required();
    scroll->add_option("--d2", d2, "second bidegree")->required();
    scroll->add_option("--ambient", ambient, "projective ambient dimension (3 or 4)");
    scroll->add_option("--genus", genus, "base curve genus");
    scroll->add_option("--output", output, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
        if (count->parsed())
            return run_count_cmd(ambient, degree, genus, emit_intermediates, output);
        if (classify->parsed()) return run_classify_cmd(show_candidates, output);
        if (oracle->parsed())
            return run_oracle_cmd(mode, curve_path, scroll_path, t_str, s_str, t0_str, samples,
                                  seed, output);
        if (chow->parsed()) return run_chow_cmd(curve_path, n, N, output);
        if (scroll->parsed()) return run_scroll_cmd(d1, d2, ambient, genus, output);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const skewcalc::precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const skewcalc::consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
