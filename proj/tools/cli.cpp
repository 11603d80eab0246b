#include "cli.hpp"

#include "windmill/decomp.hpp"
#include "windmill/numtheory.hpp"
#include "windmill/render.hpp"
#include "windmill/report.hpp"
#include "windmill/verify.hpp"
#include "windmill/windmill.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

namespace windmill::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::int64_t parse_decimal(const std::string& text, const char* what) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw UsageError(std::string(what) + " must be a decimal integer, got '" + text + "'");
    }
    if (value > static_cast<std::int64_t>(kMaxModulus) || value < -static_cast<std::int64_t>(kMaxModulus)) {
        throw UsageError(std::string(what) + " exceeds the 62-bit input bound");
    }
    return value;
}

std::int64_t parse_odd_prime(const std::string& text) {
    const std::int64_t p = parse_decimal(text, "p");
    if (p < 3) throw UsageError("p must be an odd prime; " + text + " is less than 3");
    if (p % 2 == 0) throw UsageError("p must be an odd prime; " + text + " is even");
    if (!is_prime(static_cast<std::uint64_t>(p))) throw UsageError("p must be an odd prime; " + text + " is composite");
    return p;
}

json solution_json(const Solution& s) { return json::array({s.a, s.b, s.c, s.d}); }

json vec_json(IVec2 v) { return json::array({v.x, v.y}); }

std::string vertex_string(const std::pair<Rational, Rational>& v) {
    return "(" + v.first.str() + "," + v.second.str() + ")";
}

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_json(std::ostream& out, Report report, const Stopwatch& clock) {
    report.timing_ms = clock.elapsed_ms();
    out << to_json(report).dump(2) << "\n";
}

struct DecomposeArgs {
    std::string p;
    std::string format = "text";
    bool orbits = false;
};

int cmd_decompose(const DecomposeArgs& args, std::ostream& out) {
    Stopwatch clock;
    const std::int64_t p = parse_odd_prime(args.p);
    const std::vector<Solution> sols = enumerate_fast(p);
    const std::vector<OrbitEntry> orbits = vierergruppe_orbits(sols);

    if (args.format == "json") {
        Report report{"decompose", {{"p", p}, {"orbits", args.orbits}}, json::object(), 0.0};
        json list = json::array();
        for (const Solution& s : sols) list.push_back(solution_json(s));
        json orbit_list = json::array();
        for (const OrbitEntry& o : orbits) orbit_list.push_back({{"rep", solution_json(o.rep)}, {"size", o.size}});
        report.results = {{"p", p}, {"count", sols.size()}, {"solutions", list}, {"orbits", orbit_list}};
        emit_json(out, report, clock);
        return kExitOk;
    }

    if (args.orbits) {
        const int w = std::max<int>(4, static_cast<int>(std::to_string(p).size()) + 1);
        out << std::setw(w) << "a" << std::setw(w) << "b" << std::setw(w) << "c" << std::setw(w) << "d"
            << " | size\n";
        for (const OrbitEntry& o : orbits) {
            out << std::setw(w) << o.rep.a << std::setw(w) << o.rep.b << std::setw(w) << o.rep.c << std::setw(w)
                << o.rep.d << " | " << std::setw(4) << o.size << "\n";
        }
        out << "total " << sols.size() << "\n";
        return kExitOk;
    }
    out << "p = " << p << "\n";
    out << "count = " << sols.size() << "\n";
    for (const Solution& s : sols) {
        out << p << " = " << s.a << "*" << s.b << " + " << s.c << "*" << s.d << "\n";
    }
    return kExitOk;
}

struct TwoSquaresArgs {
    std::string p;
    std::string method = "grace";
    std::string format = "text";
};

int cmd_two_squares(const TwoSquaresArgs& args, std::ostream& out, std::ostream& err) {
    Stopwatch clock;
    const std::int64_t p = parse_odd_prime(args.p);
    if (p % 4 != 1) {
        throw UsageError("p = " + args.p + " is congruent to 3 mod 4; only primes congruent to 1 mod 4 are sums of two squares");
    }
    std::optional<std::pair<std::int64_t, std::int64_t>> grace;
    std::optional<std::pair<std::int64_t, std::int64_t>> fixed;
    if (args.method == "grace" || args.method == "both") grace = two_squares_grace(p);
    if (args.method == "fixed-point" || args.method == "both") {
        if (p > 10'000'000) throw UsageError("the fixed-point method enumerates all solutions and is limited to p <= 1e7");
        fixed = two_squares_fixed_point(p);
    }
    const auto result = grace ? *grace : *fixed;
    const bool agree = !(grace && fixed) || *grace == *fixed;

    if (args.format == "json") {
        Report report{"two-squares", {{"p", p}, {"method", args.method}}, json::object(), 0.0};
        report.results = {{"a", result.first}, {"b", result.second}};
        if (grace && fixed) report.results["agree"] = agree;
        emit_json(out, report, clock);
    } else {
        out << result.first << " " << result.second << "\n";
        if (grace && fixed) out << (agree ? "methods agree" : "methods DISAGREE") << "\n";
    }
    if (!agree) {
        err << "grace gives " << grace->first << " " << grace->second << ", fixed point gives " << fixed->first << " "
            << fixed->second << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

struct LatticeArgs {
    std::string p;
    std::string mu;
    std::string svg;
    int extent = 8;
    std::string format = "text";
};

int cmd_lattice(const LatticeArgs& args, std::ostream& out) {
    Stopwatch clock;
    const std::int64_t p = parse_odd_prime(args.p);
    std::optional<SlopeClass> slope;
    if (args.mu == "inf" || args.mu == "infinity") {
        slope = SlopeClass::infinity(p);
    } else {
        const std::int64_t mu = parse_decimal(args.mu, "mu");
        if (mu < 0 || mu >= p) throw UsageError("mu must lie in [0, p) or be 'inf', got " + args.mu);
        slope = SlopeClass::finite(p, mu);
    }
    const LatticeBasis basis = lambda_mu(*slope);
    const LatticeBasis reduced = gauss_reduce(basis);
    const IVec2 minimal = minimal_vector(basis);
    const VoronoiData cell = voronoi_cell(basis);
    const auto bases = all_windmill_bases(basis);
    const bool middle = !slope->is_infinity() && slope->mu() >= 2 && slope->mu() <= p - 2;
    std::optional<Solution> standard;
    std::optional<std::pair<SlopeClass, Solution>> partner;
    if (middle) {
        standard = standard_black_basis(*slope);
        partner = fast_solution_for_pair(*slope);
    }
    if (!args.svg.empty()) {
        std::ofstream file(args.svg);
        if (!file) throw UsageError("cannot open " + args.svg + " for writing");
        file << lattice_svg(*slope, args.extent).str();
    }

    if (args.format == "json") {
        Report report{"lattice", {{"p", p}, {"mu", args.mu}}, json::object(), 0.0};
        json& r = report.results;
        r["basis"] = {vec_json(basis.u()), vec_json(basis.v())};
        r["reduced_basis"] = {vec_json(reduced.u()), vec_json(reduced.v())};
        r["minimal_vector"] = vec_json(minimal);
        r["voronoi_vectors"] = json::array();
        for (IVec2 v : cell.vectors) r["voronoi_vectors"].push_back(vec_json(v));
        r["cell_vertices"] = json::array();
        for (const auto& [x, y] : cell.cell_vertices) r["cell_vertices"].push_back({x.str(), y.str()});
        if (bases) {
            r["windmill_color"] = std::string(to_string(bases->color));
            r["windmill_bases"] = json::array();
            for (const LatticeBasis& b : bases->bases()) {
                r["windmill_bases"].push_back({vec_json(b.u()), vec_json(b.v())});
            }
        } else {
            r["windmill_color"] = nullptr;
            r["windmill_bases"] = json::array();
        }
        r["standard_solution"] = standard ? solution_json(*standard) : json(nullptr);
        if (partner) r["black_slope"] = partner->first.mu();
        emit_json(out, report, clock);
        return kExitOk;
    }

    out << "lattice " << to_string(*slope) << "\n";
    out << "basis " << basis << "\n";
    out << "reduced basis " << reduced << "\n";
    out << "minimal vector " << minimal << "\n";
    out << "voronoi vectors";
    for (IVec2 v : cell.vectors) out << " " << v;
    out << "\ncell vertices";
    for (const auto& v : cell.cell_vertices) out << " " << vertex_string(v);
    out << "\n";
    if (!bases) {
        out << "no windmill basis\n";
        return kExitOk;
    }
    out << "windmill color " << to_string(bases->color) << "\n";
    out << "windmill bases";
    for (const LatticeBasis& b : bases->bases()) out << " {" << b.u() << " " << b.v() << "}";
    out << "\n";
    if (standard) {
        out << "standard solution (" << standard->a << "," << standard->b << "," << standard->c << ","
            << standard->d << "): " << p << " = " << standard->a << "*" << standard->b << " + " << standard->c << "*"
            << standard->d << "\n";
    } else if (partner) {
        out << "black partner mu* = " << partner->first.mu() << " with solution (" << partner->second.a << ","
            << partner->second.b << "," << partner->second.c << "," << partner->second.d << ")\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string max_p;
    std::string mode;
    int jobs = 1;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    Stopwatch clock;
    const auto mode = parse_verify_mode(args.mode);
    if (!mode) throw UsageError("--mode must be one of count, oracle, color, irreducible");
    const std::int64_t max_value = parse_decimal(args.max_p, "--max-p");
    if (max_value > verify_limit(*mode)) {
        throw UsageError("--max-p for mode " + args.mode + " is limited to " + std::to_string(verify_limit(*mode)));
    }
    const SweepResult result = verify_sweep(*mode, max_value, args.jobs);
    const bool pass = result.failures.empty();

    if (args.format == "json") {
        Report report{"verify", {{"max_p", max_value}, {"mode", args.mode}, {"jobs", args.jobs}}, json::object(), 0.0};
        report.results = {{"checked", result.checked}, {"failures", result.failures}, {"pass", pass}};
        emit_json(out, report, clock);
    } else {
        out << "mode " << args.mode << ": checked " << result.checked
            << (*mode == VerifyMode::Irreducible ? " values of n" : " primes") << " up to " << max_value << "\n";
        out << (pass ? "all pass" : std::to_string(result.failures.size()) + " FAILED") << "\n";
        out << "time " << std::fixed << std::setprecision(1) << clock.elapsed_ms() << " ms\n";
    }
    for (const std::string& f : result.failures) err << "counterexample: " << f << "\n";
    return pass ? kExitOk : kExitViolation;
}

struct IrreducibleArgs {
    std::string n;
    bool list = false;
    std::string format = "text";
};

int cmd_irreducible(const IrreducibleArgs& args, std::ostream& out) {
    Stopwatch clock;
    const std::int64_t n = parse_decimal(args.n, "n");
    if (n < 1) throw UsageError("n must be at least 1, got " + args.n);
    if (n > 1'000'000'000) throw UsageError("n is limited to 1e9");
    if (args.list && n > 10'000) throw UsageError("--list is limited to n <= 10000");
    const std::int64_t count = irreducible_count(n);
    std::vector<IrreducibleMatrix> mats;
    if (args.list) mats = irreducible_enumerate(n);

    if (args.format == "json") {
        Report report{"irreducible", {{"n", n}, {"list", args.list}}, json::object(), 0.0};
        report.results = {{"n", n}, {"count", count}};
        if (args.list) {
            json list = json::array();
            for (const auto& m : mats) list.push_back({m.a, m.b, m.c, m.d});
            report.results["matrices"] = list;
        }
        emit_json(out, report, clock);
        return kExitOk;
    }
    out << count << "\n";
    for (const auto& m : mats) out << "[[" << m.a << " " << m.b << "] [" << m.c << " " << m.d << "]]\n";
    return kExitOk;
}

struct TilingArgs {
    std::string p, a, b, c, d;
    std::string out_path;
    int extent = 4;
};

int cmd_tiling(const TilingArgs& args, std::ostream& out) {
    const std::int64_t p = parse_odd_prime(args.p);
    const Solution sol{parse_decimal(args.a, "a"), parse_decimal(args.b, "b"), parse_decimal(args.c, "c"),
                       parse_decimal(args.d, "d")};
    if (!is_solution(sol, p)) {
        throw UsageError("(" + args.a + "," + args.b + "," + args.c + "," + args.d +
                         ") is not a solution: need nonnegative entries, ab + cd = p and min(a,b) > max(c,d)");
    }
    const std::string svg = tiling_svg(sol, args.extent).str();
    if (args.out_path.empty()) {
        out << svg;
        return kExitOk;
    }
    std::ofstream file(args.out_path);
    if (!file) throw UsageError("cannot open " + args.out_path + " for writing");
    file << svg;
    out << "wrote " << args.out_path << "\n";
    return kExitOk;
}

int default_jobs() {
    if (const char* env = std::getenv("WINDMILL_JOBS")) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), value);
        if (ec == std::errc() && value > 0) return value;
    }
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decompositions p = ab + cd of odd primes via windmill bases of index-p lattices", "windmill"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "json"};

    DecomposeArgs decompose;
    auto* dec = app.add_subcommand("decompose", "List all (p+1)/2 solutions of p = ab + cd, min(a,b) > max(c,d)");
    dec->add_option("p", decompose.p, "odd prime")->required();
    dec->add_option("--format", decompose.format)->check(CLI::IsMember(formats));
    dec->add_flag("--orbits", decompose.orbits, "print the four-group orbit table");

    TwoSquaresArgs squares;
    auto* two = app.add_subcommand("two-squares", "Write a prime p = 1 mod 4 as a^2 + b^2");
    two->add_option("p", squares.p, "prime congruent to 1 mod 4")->required();
    two->add_option("--method", squares.method)->check(CLI::IsMember({"grace", "fixed-point", "both"}));
    two->add_option("--format", squares.format)->check(CLI::IsMember(formats));

    LatticeArgs lattice;
    auto* lat = app.add_subcommand("lattice", "Describe the lattice x + mu*y = 0 mod p");
    lat->add_option("p", lattice.p, "odd prime")->required();
    lat->add_option("mu", lattice.mu, "slope in [0, p) or 'inf'")->required();
    lat->add_option("--svg", lattice.svg, "write a picture to this path");
    lat->add_option("--extent", lattice.extent, "half-width of the picture window")->check(CLI::Range(1, 200));
    lat->add_option("--format", lattice.format)->check(CLI::IsMember(formats));

    VerifyArgs verify;
    verify.jobs = default_jobs();
    auto* ver = app.add_subcommand("verify", "Sweep an invariant suite over all odd primes up to a bound");
    ver->add_option("--max-p", verify.max_p, "largest prime (or n) checked")->required();
    ver->add_option("--mode", verify.mode)->required()->check(CLI::IsMember({"count", "oracle", "color", "irreducible"}));
    ver->add_option("--jobs", verify.jobs, "worker threads (default $WINDMILL_JOBS or 1)")->check(CLI::Range(1, 256));
    ver->add_option("--format", verify.format)->check(CLI::IsMember(formats));

    IrreducibleArgs irreducible;
    auto* irr = app.add_subcommand("irreducible", "Count irreducible 2x2 matrices of determinant n");
    irr->add_option("n", irreducible.n, "determinant")->required();
    irr->add_flag("--list", irreducible.list, "list the matrices");
    irr->add_option("--format", irreducible.format)->check(CLI::IsMember(formats));

    TilingArgs tiling;
    auto* til = app.add_subcommand("tiling", "Draw the plane tiling of a solution as SVG");
    til->add_option("p", tiling.p)->required();
    til->add_option("a", tiling.a)->required();
    til->add_option("b", tiling.b)->required();
    til->add_option("c", tiling.c)->required();
    til->add_option("d", tiling.d)->required();
    til->add_option("--out", tiling.out_path, "output path (default: standard output)");
    til->add_option("--extent", tiling.extent, "tiles drawn per generator direction")->check(CLI::Range(1, 50));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*dec) return cmd_decompose(decompose, out);
        if (*two) return cmd_two_squares(squares, out, err);
        if (*lat) return cmd_lattice(lattice, out);
        if (*ver) return cmd_verify(verify, out, err);
        if (*irr) return cmd_irreducible(irreducible, out);
        if (*til) return cmd_tiling(tiling, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace windmill::cli
