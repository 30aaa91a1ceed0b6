#include "cli.hpp"

#include "monocirc/circuit.hpp"
#include "monocirc/circuit_io.hpp"
#include "monocirc/eh_builders.hpp"
#include "monocirc/errors.hpp"
#include "monocirc/evaluate.hpp"
#include "monocirc/oracle.hpp"
#include "monocirc/sampling.hpp"
#include "monocirc/schur.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace monocirc::cli {

namespace {

/// Bad user input that is not a CLI11 flag error (files, points, shapes).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Params {
    unsigned k = 0;
    std::uint64_t n = 0;
    unsigned m = 0;
    std::string shape;
    std::string output;
    std::string format = "circuit";
    std::string point;
    std::string circuit_file;
    std::uint64_t seed = 1;
    unsigned trials = 10;
    std::size_t cap = default_enumeration_cap;
    std::vector<std::uint64_t> n_list;
    std::string n_pow2;
    std::vector<std::string> shapes;
    std::string first_row_pow2;
    std::string rest;
};

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const char* what) {
    std::vector<std::uint64_t> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
        }
        out.push_back(v);
    }
    return out;
}

Partition parse_shape(const std::string& text) {
    std::vector<unsigned> parts;
    for (auto v : parse_u64_list(text, "shape")) {
        parts.push_back(static_cast<unsigned>(v));
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw UsageError("shape '" + text + "': " + e.what());
    }
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("expected lo:hi, got '" + text + "'");
    }
    const auto lo = parse_u64_list(text.substr(0, colon), "range");
    const auto hi = parse_u64_list(text.substr(colon + 1), "range");
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0] || hi[0] > 62) {
        throw UsageError("bad range '" + text + "'");
    }
    return {static_cast<unsigned>(lo[0]), static_cast<unsigned>(hi[0])};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write '" + path + "'");
    }
    out << text;
}

std::string point_string(std::span<const mpz_class> p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += (i ? "," : "") + p[i].get_str();
    }
    return s + ")";
}

enum class Kind { e, h, schur };

struct Built {
    Circuit circuit;
    std::string report;
};

Built build_kind(Kind kind, const Params& p) {
    if (p.k == 0) {
        throw UsageError("--k must be at least 1");
    }
    if (kind == Kind::schur) {
        auto sc = synthesize_schur(parse_shape(p.shape), p.k);
        return {std::move(sc.circuit), report_json(sc.report)};
    }
    CircuitBuilder b(p.k);
    std::vector<GateId> vars;
    for (unsigned i = 0; i < p.k; ++i) {
        vars.push_back(b.input(i));
    }
    GateId out;
    nlohmann::ordered_json j;
    if (kind == Kind::e) {
        const unsigned m = p.m == 0 ? p.k : p.m;
        if (m > p.k) {
            throw ModelError("zero polynomial not representable: e_" + std::to_string(m) + " in " +
                             std::to_string(p.k) + " variables");
        }
        out = build_elementary(b, vars).at(m);
        j["kind"] = "e";
        j["k"] = p.k;
        j["m"] = m;
    } else {
        out = build_h_single(b, vars, p.n);
        j["kind"] = "h";
        j["k"] = p.k;
        j["n"] = p.n;
    }
    Circuit c = prune(b.finish(out));
    const auto count = gate_count(c);
    j["arith"] = count.arith;
    j["total"] = count.total;
    return {std::move(c), j.dump(2)};
}

int cmd_build(Kind kind, const Params& p, std::ostream& out, std::ostream& err) {
    auto built = build_kind(kind, p);
    std::string text;
    if (p.format == "circuit") {
        text = serialize(built.circuit);
    } else if (p.format == "dot") {
        text = export_dot(built.circuit);
    } else {
        throw UsageError("unknown --format '" + p.format + "' (circuit|dot)");
    }
    if (p.output.empty() || p.output == "-") {
        out << text;
        err << built.report << '\n';
    } else {
        write_text(p.output, text, out);
        out << built.report << '\n';
    }
    return ok;
}

Circuit load_circuit(const std::string& path) {
    const auto text = read_file(path);
    try {
        return deserialize(text);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

int cmd_eval(const Params& p, std::ostream& out, std::ostream& err) {
    const Circuit c = load_circuit(p.circuit_file);
    if (const auto report = validate(c); !report.ok()) {
        for (const auto& v : report.violations) {
            err << "gate " << v.gate << ": " << v.message << '\n';
        }
        return usage_error;
    }
    std::vector<mpz_class> point;
    for (auto v : parse_u64_list(p.point, "point")) {
        point.emplace_back(std::to_string(v));
    }
    if (point.size() != c.num_vars()) {
        throw UsageError("point has " + std::to_string(point.size()) + " coordinates, circuit expects " +
                         std::to_string(c.num_vars()));
    }
    out << evaluate(c, point).get_str() << '\n';
    return ok;
}

int cmd_verify(Kind kind, const Params& p, std::ostream& out, std::ostream& err) {
    if (p.k == 0) {
        throw UsageError("--k must be at least 1");
    }
    std::optional<Partition> shape;
    std::string label;
    if (kind == Kind::schur) {
        shape = parse_shape(p.shape);
        if (shape->length() > p.k) {
            throw ModelError("zero polynomial not representable: shape " + shape->to_string() +
                             " has more rows than k = " + std::to_string(p.k));
        }
        if (count_ssyt(*shape, p.k, p.cap) > p.cap) {
            err << "oracle guard: more than " << p.cap << " tableaux\n";
            return guard_exceeded;
        }
        label = "schur " + shape->to_string() + " k=" + std::to_string(p.k);
    } else if (kind == Kind::h) {
        mpz_class terms;
        mpz_bin_uiui(terms.get_mpz_t(), p.n + p.k - 1, p.k - 1);
        if (terms > mpz_class(std::to_string(p.cap))) {
            err << "oracle guard: " << terms.get_str() << " monomials exceed cap " << p.cap << '\n';
            return guard_exceeded;
        }
        label = "h_" + std::to_string(p.n) + " k=" + std::to_string(p.k);
    } else {
        label = "e_" + std::to_string(p.m == 0 ? p.k : p.m) + " k=" + std::to_string(p.k);
    }

    Circuit c = p.circuit_file.empty() ? build_kind(kind, p).circuit : load_circuit(p.circuit_file);
    if (c.num_vars() != p.k) {
        throw UsageError("circuit has " + std::to_string(c.num_vars()) + " inputs, expected k = " +
                         std::to_string(p.k));
    }
    if (const auto report = validate(c); !report.ok()) {
        out << "FAIL " << label << ": circuit is not a valid monotone circuit\n";
        for (const auto& v : report.violations) {
            out << "  gate " << v.gate << ": " << v.message << '\n';
        }
        return verify_failed;
    }

    std::mt19937_64 rng(p.seed);
    for (unsigned t = 0; t < p.trials; ++t) {
        const auto point = random_point(rng, p.k, 1, 5);
        const mpz_class got = evaluate(c, point);
        mpz_class want;
        switch (kind) {
        case Kind::e:
            want = e_eval(p.m == 0 ? p.k : p.m, point);
            break;
        case Kind::h:
            want = h_eval(static_cast<unsigned>(p.n), point);
            break;
        case Kind::schur:
            want = schur_eval(*shape, point);
            break;
        }
        if (got != want) {
            out << "FAIL " << label << " at point " << point_string(point) << ": circuit=" << got.get_str()
                << " oracle=" << want.get_str() << '\n';
            return verify_failed;
        }
    }
    out << "PASS " << label << ": " << p.trials << " points (seed " << p.seed << ")\n";
    return ok;
}

std::string csv_row(const std::string& kind, const Partition& shape, unsigned k, std::uint64_t n,
                    const GateCount& count) {
    const auto bound = predict_bound(shape, k);
    std::ostringstream row;
    std::string parts;
    for (std::size_t i = 0; i < shape.length(); ++i) {
        parts += (i ? "," : "") + std::to_string(shape.parts()[i]);
    }
    row << kind << ",\"" << parts << "\"," << k << ',' << n << ',' << count.arith << ',' << count.total << ','
        << bound.d << ',' << bound.bound.log2_lambda1 << ',' << bound.bound.headline << ','
        << bound.bound.explicit_sum << '\n';
    return row.str();
}

constexpr const char* csv_header = "kind,shape,k,n,arith,total,d,log2_lambda1,headline_bound,explicit_sum\n";

int cmd_stats(Kind kind, const Params& p, std::ostream& out) {
    if (p.k == 0) {
        throw UsageError("--k must be at least 1");
    }
    out << csv_header;
    if (kind == Kind::h) {
        auto ns = p.n_list;
        if (!p.n_pow2.empty()) {
            const auto [lo, hi] = parse_range(p.n_pow2);
            for (unsigned t = lo; t <= hi; ++t) {
                ns.push_back(std::uint64_t{1} << t);
            }
        }
        for (auto n : ns) {
            CircuitBuilder b(p.k);
            std::vector<GateId> vars;
            for (unsigned i = 0; i < p.k; ++i) {
                vars.push_back(b.input(i));
            }
            const auto c = prune(b.finish(build_h_single(b, vars, n)));
            const Partition row = n == 0 ? Partition{} : Partition({static_cast<unsigned>(n)});
            out << csv_row("h", row, p.k, n, gate_count(c));
        }
        return ok;
    }
    std::vector<Partition> shapes;
    for (const auto& s : p.shapes) {
        shapes.push_back(parse_shape(s));
    }
    if (!p.first_row_pow2.empty()) {
        const auto [lo, hi] = parse_range(p.first_row_pow2);
        const auto rest = parse_u64_list(p.rest, "--rest");
        for (unsigned t = lo; t <= hi; ++t) {
            std::vector<unsigned> parts{1u << t};
            for (auto r : rest) {
                parts.push_back(static_cast<unsigned>(r));
            }
            shapes.emplace_back(std::move(parts));
        }
    }
    for (const auto& shape : shapes) {
        const auto sc = synthesize_schur(shape, p.k);
        out << csv_row("schur", shape, p.k, shape.size(), gate_count(sc.circuit));
    }
    return ok;
}

int cmd_export_dot(const Params& p, std::ostream& out) {
    const Circuit c = load_circuit(p.circuit_file);
    write_text(p.output, export_dot(c), out);
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Params p;
    CLI::App app{"Monotone {+,x} circuits for symmetric polynomials", "monocirc"};
    app.require_subcommand(1);

    auto add_kind_options = [&p](CLI::App* sub, Kind kind) {
        sub->add_option("--k", p.k, "number of variables")->required();
        switch (kind) {
        case Kind::e:
            sub->add_option("--m", p.m, "degree of e_m (default k)");
            break;
        case Kind::h:
            sub->add_option("--n", p.n, "degree of h_n")->required();
            break;
        case Kind::schur:
            sub->add_option("--shape", p.shape, "partition, largest part first, e.g. 3,1")->required();
            break;
        }
    };

    auto* build = app.add_subcommand("build", "build a circuit and print its gate-count report");
    build->require_subcommand(1);
    std::vector<std::pair<CLI::App*, Kind>> build_subs = {
        {build->add_subcommand("e", "elementary symmetric e_m"), Kind::e},
        {build->add_subcommand("h", "complete homogeneous h_n"), Kind::h},
        {build->add_subcommand("schur", "Schur polynomial s_shape"), Kind::schur},
    };
    for (auto& [sub, kind] : build_subs) {
        add_kind_options(sub, kind);
        sub->add_option("-o,--output", p.output, "circuit file (default: stdout, report on stderr)");
        sub->add_option("--format", p.format, "circuit|dot")->check(CLI::IsMember({"circuit", "dot"}));
    }

    auto* eval = app.add_subcommand("eval", "evaluate a circuit file at an integer point");
    eval->add_option("circuit", p.circuit_file, "circuit file")->required();
    eval->add_option("--point", p.point, "comma-separated non-negative integers")->required();

    auto* verify = app.add_subcommand("verify", "compare a circuit with the brute-force oracle");
    verify->require_subcommand(1);
    std::vector<std::pair<CLI::App*, Kind>> verify_subs = {
        {verify->add_subcommand("e", "elementary symmetric e_m"), Kind::e},
        {verify->add_subcommand("h", "complete homogeneous h_n"), Kind::h},
        {verify->add_subcommand("schur", "Schur polynomial s_shape"), Kind::schur},
    };
    for (auto& [sub, kind] : verify_subs) {
        add_kind_options(sub, kind);
        sub->add_option("--trials", p.trials, "random points in {1..5}^k");
        sub->add_option("--seed", p.seed, "RNG seed");
        sub->add_option("--circuit", p.circuit_file, "verify this file instead of building");
        sub->add_option("--cap", p.cap, "largest oracle enumeration allowed");
    }

    auto* stats = app.add_subcommand(
        "stats", "CSV of gate counts over a parameter grid; columns: "
                 "kind,shape,k,n,arith,total,d,log2_lambda1,headline_bound,explicit_sum");
    stats->require_subcommand(1);
    auto* stats_h = stats->add_subcommand("h", "h_n for each --n / --n-pow2");
    stats_h->add_option("--k", p.k, "number of variables")->required();
    stats_h->add_option("--n", p.n_list, "degrees")->delimiter(',');
    stats_h->add_option("--n-pow2", p.n_pow2, "degrees 2^lo..2^hi as lo:hi");
    auto* stats_s = stats->add_subcommand("schur", "s_shape for each --shape / generated family");
    stats_s->add_option("--k", p.k, "number of variables")->required();
    stats_s->add_option("--shape", p.shapes, "shape (repeatable)");
    stats_s->add_option("--first-row-pow2", p.first_row_pow2, "shapes (2^t, rest...) for t in lo:hi");
    stats_s->add_option("--rest", p.rest, "parts after the first row for --first-row-pow2");

    auto* dot = app.add_subcommand("export-dot", "render a circuit file as Graphviz DOT");
    dot->add_option("circuit", p.circuit_file, "circuit file")->required();
    dot->add_option("-o,--output", p.output, "output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage_error;
    }

    auto chosen = [](const std::vector<std::pair<CLI::App*, Kind>>& subs) -> std::optional<Kind> {
        for (const auto& [sub, kind] : subs) {
            if (sub->parsed()) {
                return kind;
            }
        }
        return std::nullopt;
    };

    try {
        if (build->parsed()) {
            return cmd_build(*chosen(build_subs), p, out, err);
        }
        if (eval->parsed()) {
            return cmd_eval(p, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(*chosen(verify_subs), p, out, err);
        }
        if (stats->parsed()) {
            return cmd_stats(stats_h->parsed() ? Kind::h : Kind::schur, p, out);
        }
        if (dot->parsed()) {
            return cmd_export_dot(p, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const ModelError& e) {
        err << "error: " << e.what() << '\n';
        return model_error;
    } catch (const EnumerationLimitError& e) {
        err << "error: " << e.what() << '\n';
        return guard_exceeded;
    }
    return usage_error;
}

} // namespace monocirc::cli
