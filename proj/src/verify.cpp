#include "windmill/verify.hpp"

#include "windmill/decomp.hpp"
#include "windmill/numtheory.hpp"
#include "windmill/windmill.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

namespace windmill {

namespace {

std::string describe(const std::vector<Solution>& sols) {
    std::ostringstream os;
    for (const Solution& s : sols) os << s;
    return os.str();
}

std::optional<std::string> check_count(std::int64_t p) {
    const auto sols = enumerate_bruteforce(p);
    if (static_cast<std::int64_t>(sols.size()) == (p + 1) / 2) return std::nullopt;
    return "p=" + std::to_string(p) + ": brute force found " + std::to_string(sols.size()) + " solutions, expected " +
           std::to_string((p + 1) / 2);
}

std::optional<std::string> check_oracle(std::int64_t p) {
    const auto fast = enumerate_fast(p);
    const auto brute = enumerate_bruteforce(p);
    if (fast != brute) {
        return "p=" + std::to_string(p) + ": fast " + describe(fast) + " != brute force " + describe(brute);
    }
    for (std::int64_t mu = 2; mu <= p - 2; ++mu) {
        auto here = fast_solution_for_pair(SlopeClass::finite(p, mu));
        auto there = fast_solution_for_pair(SlopeClass::finite(p, p - mu));
        if (here != there) {
            return "p=" + std::to_string(p) + ": slopes " + std::to_string(mu) + " and " + std::to_string(p - mu) +
                   " disagree";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_color(std::int64_t p) {
    const std::string where = "p=" + std::to_string(p) + ": ";
    if (find_windmill_basis(lambda_mu(SlopeClass::infinity(p)))) return where + "slope inf has a windmill basis";
    std::vector<std::optional<Color>> color(static_cast<std::size_t>(p));
    for (std::int64_t mu = 0; mu < p; ++mu) {
        auto found = find_windmill_basis(lambda_mu(SlopeClass::finite(p, mu)));
        const bool expect_basis = mu >= 2 && mu <= p - 2;
        if (found.has_value() != expect_basis) {
            return where + "slope " + std::to_string(mu) + (expect_basis ? " lacks" : " has") + " a windmill basis";
        }
        if (found) color[static_cast<std::size_t>(mu)] = found->second;
    }
    std::int64_t black = 0;
    for (std::int64_t mu = 2; mu <= p - 2; ++mu) {
        const auto c = color[static_cast<std::size_t>(mu)];
        const auto inv = static_cast<std::int64_t>(inverse_mod(static_cast<std::uint64_t>(mu), static_cast<std::uint64_t>(p)));
        if (c == color[static_cast<std::size_t>(p - mu)]) {
            return where + "slopes " + std::to_string(mu) + " and " + std::to_string(p - mu) + " share a color";
        }
        if (c == color[static_cast<std::size_t>(inv)]) {
            return where + "slopes " + std::to_string(mu) + " and its inverse " + std::to_string(inv) + " share a color";
        }
        const bool has_standard = standard_black_basis(SlopeClass::finite(p, mu)).has_value();
        if (has_standard != (c == Color::Black)) {
            return where + "slope " + std::to_string(mu) + " standard basis does not match its color";
        }
        black += has_standard ? 1 : 0;
    }
    if (black != (p - 3) / 2) {
        return where + std::to_string(black) + " slopes carry a standard black basis, expected " +
               std::to_string((p - 3) / 2);
    }
    return std::nullopt;
}

std::optional<std::string> check_irreducible(std::int64_t n) {
    const auto count = irreducible_count(n);
    const auto listed = static_cast<std::int64_t>(irreducible_enumerate(n).size());
    if (count == listed) return std::nullopt;
    return "n=" + std::to_string(n) + ": formula gives " + std::to_string(count) + ", enumeration finds " +
           std::to_string(listed);
}

std::vector<std::int64_t> sweep_items(VerifyMode mode, std::int64_t max_value) {
    std::vector<std::int64_t> items;
    if (mode == VerifyMode::Irreducible) {
        for (std::int64_t n = 1; n <= max_value; ++n) items.push_back(n);
        return items;
    }
    for (std::int64_t p = 3; p <= max_value; p += 2) {
        if (is_prime(static_cast<std::uint64_t>(p))) items.push_back(p);
    }
    return items;
}

}  // namespace

std::optional<VerifyMode> parse_verify_mode(std::string_view name) {
    if (name == "count") return VerifyMode::Count;
    if (name == "oracle") return VerifyMode::Oracle;
    if (name == "color") return VerifyMode::Color;
    if (name == "irreducible") return VerifyMode::Irreducible;
    return std::nullopt;
}

std::string_view to_string(VerifyMode mode) {
    switch (mode) {
        case VerifyMode::Count: return "count";
        case VerifyMode::Oracle: return "oracle";
        case VerifyMode::Color: return "color";
        case VerifyMode::Irreducible: return "irreducible";
    }
    return "?";
}

std::int64_t verify_limit(VerifyMode mode) {
    switch (mode) {
        case VerifyMode::Count: return 100'000;
        case VerifyMode::Oracle: return 100'000;
        case VerifyMode::Color: return 20'000;
        case VerifyMode::Irreducible: return 2'000;
    }
    return 0;
}

std::optional<std::string> verify_item(VerifyMode mode, std::int64_t value) {
    try {
        switch (mode) {
            case VerifyMode::Count: return check_count(value);
            case VerifyMode::Oracle: return check_oracle(value);
            case VerifyMode::Color: return check_color(value);
            case VerifyMode::Irreducible: return check_irreducible(value);
        }
    } catch (const std::exception& ex) {
        return std::to_string(value) + ": " + ex.what();
    }
    return std::nullopt;
}

SweepResult verify_sweep(VerifyMode mode, std::int64_t max_value, int jobs) {
    if (max_value > verify_limit(mode)) {
        throw DomainError(std::string("--max-p for mode ") + std::string(to_string(mode)) + " is limited to " +
                          std::to_string(verify_limit(mode)));
    }
    const std::vector<std::int64_t> items = sweep_items(mode, max_value);
    std::vector<std::optional<std::string>> outcome(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) outcome[i] = verify_item(mode, items[i]);
    };
    {
        std::vector<std::jthread> pool;
        const int n = std::clamp(jobs, 1, 256);
        for (int t = 1; t < n; ++t) pool.emplace_back(worker);
        worker();
    }
    SweepResult result;
    result.checked = static_cast<std::int64_t>(items.size());
    for (auto& o : outcome) {
        if (o) result.failures.push_back(std::move(*o));
    }
    return result;
}

}  // namespace windmill
