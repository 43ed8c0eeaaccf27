#include "seriesfact/criteria.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "seriesfact/errors.hpp"
#include "seriesfact/newton.hpp"

namespace mp = boost::multiprecision;

namespace seriesfact {

namespace {

std::string dec(const Int& v) { return v.str(); }

bool coprime(const Int& a, std::size_t b) {
    Int g = mp::gcd(a, Int(b));
    return g == 1;
}

// Exact staircase check for period m: v(a_{(k-l)m+i}) = l for l = 1..k and
// i = 1..m, then v(a_{k*m+1}) = 0.
bool staircase_matches(const Series& f, const Valuation& v,
                       unsigned long k, std::size_t m) {
    // Descending l visits indices in increasing order, so a mismatch is
    // found without reading past it.
    for (unsigned long l = k; l >= 1; --l) {
        for (std::size_t i = 1; i <= m; ++i) {
            std::size_t idx = (k - l) * m + i;
            RingElem c = f.coeff(idx);
            if (c.is_zero()) return false;
            if (!(v(c) == ValValue(Int(l)))) return false;
        }
    }
    RingElem top = f.coeff(k * m + 1);
    return !top.is_zero() && v(top) == ValValue(Int(0));
}

// Least index n >= 1 with v(a_n) = 0, within the scan horizon.
std::optional<std::size_t> least_zero_valuation(const Series& f,
                                                const Valuation& v,
                                                std::size_t scan) {
    for (std::size_t n = 1; n <= scan; ++n) {
        RingElem c = f.coeff(n);
        if (c.is_zero()) continue;
        if (v(c) == ValValue(Int(0))) return n;
    }
    return std::nullopt;
}

} // namespace

std::string status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Unit: return "unit";
        case VerdictStatus::Irreducible: return "irreducible";
        case VerdictStatus::ExactCount: return "exact-count";
        case VerdictStatus::Bounds: return "bounds";
        case VerdictStatus::Unknown: return "unknown";
    }
    return "?";
}

std::optional<std::size_t> dumas_witness(const Series& f, const Valuation& v,
                                         const Int& k, std::size_t scan) {
    // Any admissible n must be the least zero-valuation index: for a larger
    // candidate that index would sit on or below the segment.
    std::optional<std::size_t> n = least_zero_valuation(f, v, scan);
    if (!n) return std::nullopt;
    if (!coprime(k, *n)) return std::nullopt;
    if (!single_edge_test(f, v, k, *n)) return std::nullopt;
    return n;
}

std::optional<std::size_t> eisenstein_witness(const Series& f,
                                              const Valuation& v, const Int& k,
                                              std::size_t scan) {
    std::optional<std::size_t> j = least_zero_valuation(f, v, scan);
    if (!j) return std::nullopt;
    if (!coprime(k, *j)) return std::nullopt;
    ValValue kk{k};
    for (std::size_t i = 1; i < *j; ++i) {
        RingElem c = f.coeff(i);
        if (c.is_zero()) continue;
        if (v(c) < kk) return std::nullopt;
    }
    return j;
}

std::optional<std::size_t> pattern_witness(const Series& f, const Valuation& v,
                                           const Int& k, std::size_t bound) {
    unsigned long kk = k.convert_to<unsigned long>();
    if (kk == 0) return std::nullopt;
    for (std::size_t m = 1; m <= bound; ++m) {
        if (staircase_matches(f, v, kk, m)) return m;
    }
    return std::nullopt;
}

std::optional<CriterionHit> check_prime_power_basic(
    const Series& f, const ConstantFactorization& fact) {
    if (fact.omega() != 1) return std::nullopt;
    const RingElem& p = fact.factors[0].first;
    unsigned long k = fact.factors[0].second;
    CriterionHit hit{"prime-power-basic",
                     {{"prime", p.str()}, {"k", std::to_string(k)}}};
    if (k == 1) {
        hit.params["branch"] = "k=1";
        return hit;
    }
    RingElem a1 = f.coeff(1);
    if (!a1.is_zero() && !divides(p, a1)) {
        hit.params["branch"] = "a1-coprime";
        return hit;
    }
    return std::nullopt;
}

CriterionHit bounds_from_constant(const ConstantFactorization& fact) {
    return CriterionHit{
        "constant-bounds",
        {{"omega", std::to_string(fact.omega())},
         {"big-omega", std::to_string(fact.big_omega())},
         {"square-free", fact.square_free() ? "true" : "false"}}};
}

std::optional<CriterionHit> check_coprime_a1(
    const Series& f, const ConstantFactorization& fact) {
    if (fact.omega() < 2) return std::nullopt;
    RingElem a1 = f.coeff(1);
    if (a1.is_zero()) return std::nullopt;
    for (const auto& [p, k] : fact.factors) {
        if (divides(p, a1)) return std::nullopt;
    }
    return CriterionHit{"coprime-a1",
                        {{"omega", std::to_string(fact.omega())},
                         {"a1", a1.str()}}};
}

ValuationBound upper_bound_valuation(const Series& f, const Valuation& v,
                                     const Config& cfg) {
    Int best = v(f.coeff(0)).finite();
    std::size_t argmin = 0;
    for (std::size_t j = 1; j <= cfg.valuation_scan && best > 1; ++j) {
        RingElem c = f.coeff(j);
        if (c.is_zero()) continue;
        Int cand = v(c).finite() + Int(j);
        if (cand < best) {
            best = cand;
            argmin = j;
        }
    }
    CriterionHit hit{"valuation-bound",
                     {{"valuation", v.str()},
                      {"k", dec(v(f.coeff(0)).finite())},
                      {"bound", dec(best)},
                      {"argmin", std::to_string(argmin)}}};
    return ValuationBound{std::move(hit), std::move(best)};
}

std::optional<CriterionHit> check_pattern(const Series& f,
                                          const ConstantFactorization& fact,
                                          const Config& cfg) {
    if (f.ring() != RingTag::integers || fact.omega() != 1) return std::nullopt;
    const RingElem& p = fact.factors[0].first;
    Int k(fact.factors[0].second);
    Valuation v = Valuation::p_adic(p);
    std::optional<std::size_t> m =
        pattern_witness(f, v, k, cfg.pattern_period_bound);
    if (!m) return std::nullopt;
    return CriterionHit{
        "pattern",
        {{"prime", p.str()},
         {"k", dec(k)},
         {"m", std::to_string(*m)},
         {"n", std::to_string(k.convert_to<std::size_t>() * *m + 1)}}};
}

std::optional<CriterionHit> check_gcd_eisenstein(
    const Series& f, const ConstantFactorization& fact, const Config& cfg) {
    if (f.ring() != RingTag::integers || fact.omega() != 1) return std::nullopt;
    const RingElem& p = fact.factors[0].first;
    Int k(fact.factors[0].second);
    Valuation v = Valuation::p_adic(p);
    std::optional<std::size_t> j =
        eisenstein_witness(f, v, k, cfg.zero_valuation_scan);
    if (!j) return std::nullopt;
    return CriterionHit{"gcd-eisenstein",
                        {{"prime", p.str()},
                         {"k", dec(k)},
                         {"j", std::to_string(*j)}}};
}

std::optional<CriterionHit> check_dumas(const Series& f, const Valuation& v,
                                        const Config& cfg) {
    ValValue k0 = v(f.coeff(0));
    if (k0.is_infinite() || k0.finite() < 1) return std::nullopt;
    const Int& k = k0.finite();
    std::optional<std::size_t> n =
        dumas_witness(f, v, k, cfg.zero_valuation_scan);
    if (!n) return std::nullopt;
    return CriterionHit{"dumas",
                        {{"valuation", v.str()},
                         {"k", dec(k)},
                         {"n", std::to_string(*n)}}};
}

std::optional<CriterionHit> check_multi_prime(
    const Series& f, const ConstantFactorization& fact, const Config& cfg) {
    if (fact.omega() < 2) return std::nullopt;
    if (f.ring() != RingTag::integers && f.ring() != RingTag::gaussian)
        return std::nullopt;

    struct Witness {
        std::size_t n;
        bool eisenstein;
        std::optional<std::size_t> pattern_m;
    };
    std::vector<Witness> witnesses;
    for (const auto& [p, k] : fact.factors) {
        Valuation v = Valuation::p_adic(p);
        Int kk(k);
        std::optional<std::size_t> n =
            dumas_witness(f, v, kk, cfg.zero_valuation_scan);
        if (!n) return std::nullopt;
        Witness w{*n, false, std::nullopt};
        w.eisenstein =
            eisenstein_witness(f, v, kk, cfg.zero_valuation_scan) == n;
        std::optional<std::size_t> m =
            pattern_witness(f, v, kk, cfg.pattern_period_bound);
        if (m && k * *m + 1 == *n) w.pattern_m = m;
        witnesses.push_back(w);
    }

    bool all_eis = true, all_pat = true;
    for (const Witness& w : witnesses) {
        all_eis = all_eis && w.eisenstein;
        all_pat = all_pat && w.pattern_m.has_value();
    }
    std::string name = all_eis ? "multi-prime-eisenstein"
                     : all_pat ? "multi-prime-pattern"
                               : "multi-prime";

    CriterionHit hit{name, {{"r", std::to_string(fact.omega())}}};
    for (std::size_t t = 0; t < witnesses.size(); ++t) {
        std::string suffix = "." + std::to_string(t + 1);
        hit.params["prime" + suffix] = fact.factors[t].first.str();
        hit.params["k" + suffix] = std::to_string(fact.factors[t].second);
        hit.params["n" + suffix] = std::to_string(witnesses[t].n);
        if (witnesses[t].pattern_m) {
            hit.params["m" + suffix] = std::to_string(*witnesses[t].pattern_m);
        }
    }
    return hit;
}

namespace {

// Scan-exhaustion notes: a bound or witness that failed to materialize
// within a finite window proves nothing, and the verdict says so.
void note_unimproved_bound(const ValuationBound& vb, Verdict& out) {
    if (vb.bound > 1 && vb.hit.params.at("argmin") == "0") {
        out.notes.push_back(
            "no coefficient sharpened the constant-term valuation bound "
            "within the scan window");
    }
}

void note_dry_zero_scan(const Series& tail, const Valuation& v,
                        const Config& cfg, Verdict& out) {
    if (!least_zero_valuation(tail, v, cfg.zero_valuation_scan)) {
        out.notes.push_back(
            "no coefficient of valuation zero found within the scan window");
    }
}

void analyze_factored(const Series& tail, RingTag ring, const Config& cfg,
                      Verdict& out) {
    ConstantFactorization fact = factor_constant(tail.coeff(0));

    if (fact.omega() == 1) {
        const RingElem& p = fact.factors[0].first;
        bool irreducible = false;

        if (auto hit = check_prime_power_basic(tail, fact)) {
            out.criteria.push_back(*hit);
            irreducible = true;
        }

        Valuation v = Valuation::p_adic(p);
        ValuationBound vb = upper_bound_valuation(tail, v, cfg);
        out.criteria.push_back(vb.hit);
        if (vb.bound == 1) irreducible = true;

        if (ring == RingTag::integers) {
            if (auto hit = check_pattern(tail, fact, cfg)) {
                out.criteria.push_back(*hit);
                irreducible = true;
            }
            if (auto hit = check_gcd_eisenstein(tail, fact, cfg)) {
                out.criteria.push_back(*hit);
                irreducible = true;
            }
            if (auto hit = check_dumas(tail, v, cfg)) {
                out.criteria.push_back(*hit);
                irreducible = true;
            } else {
                note_dry_zero_scan(tail, v, cfg, out);
            }
        }
        if (!irreducible) note_unimproved_bound(vb, out);

        if (irreducible) {
            out.status = VerdictStatus::Irreducible;
            out.lower = out.upper = 1;
        } else {
            out.status = VerdictStatus::Unknown;
            out.lower = 1;
            out.upper = vb.bound.convert_to<unsigned long>();
        }
        return;
    }

    out.criteria.push_back(bounds_from_constant(fact));
    bool exact = fact.square_free();
    if (auto hit = check_coprime_a1(tail, fact)) {
        out.criteria.push_back(*hit);
        exact = true;
    }
    if (auto hit = check_multi_prime(tail, fact, cfg)) {
        out.criteria.push_back(*hit);
        exact = true;
    }
    out.lower = fact.omega();
    out.upper = exact ? fact.omega() : fact.big_omega();
    out.status =
        exact ? VerdictStatus::ExactCount : VerdictStatus::Bounds;
}

void analyze_polyq(const Series& tail, const Config& cfg,
                   PolyValuationMode mode, Verdict& out) {
    Valuation v = mode == PolyValuationMode::y_adic
                      ? Valuation::y_adic()
                      : Valuation::degree_experimental();
    if (mode == PolyValuationMode::degree) {
        out.notes.push_back(
            "degree mode is experimental: deg is multiplicative but not "
            "ultrametric, so conclusions drawn from it are heuristic");
    }

    RingElem a0 = tail.coeff(0);
    Int k = v(a0).finite();
    if (k == 0) {
        out.status = VerdictStatus::Unknown;
        out.lower = 1;
        out.notes.push_back("v(a0) = 0: the chosen valuation cannot "
                            "constrain this series");
        return;
    }

    if (mode == PolyValuationMode::y_adic) {
        const PolyQ& poly = a0.as_poly();
        if (poly.degree() != poly.low_order()) {
            out.notes.push_back(
                "a0 is not a unit times a power of y; the verdict is "
                "relative to the localization of Q[y] at (y)");
        }
    }

    bool irreducible = false;
    ValuationBound vb = upper_bound_valuation(tail, v, cfg);
    out.criteria.push_back(vb.hit);
    if (vb.bound == 1) irreducible = true;
    if (auto hit = check_dumas(tail, v, cfg)) {
        out.criteria.push_back(*hit);
        irreducible = true;
    } else {
        note_dry_zero_scan(tail, v, cfg, out);
    }
    if (!irreducible) note_unimproved_bound(vb, out);

    if (irreducible) {
        out.status = VerdictStatus::Irreducible;
        out.lower = out.upper = 1;
    } else {
        out.status = VerdictStatus::Unknown;
        out.lower = 1;
        out.upper = vb.bound.convert_to<unsigned long>();
    }
}

void check_consistency(const Verdict& out) {
    const auto fail = [](const char* what) {
        throw std::logic_error(std::string("verdict inconsistency: ") + what);
    };
    if (out.lower && out.upper && *out.lower > *out.upper)
        fail("lower bound exceeds upper bound");
    switch (out.status) {
        case VerdictStatus::Unit:
            if (out.lower != 0 || out.upper != 0) fail("unit with factors");
            break;
        case VerdictStatus::Irreducible:
            if (out.lower != 1 || out.upper != 1) fail("irreducible count");
            break;
        case VerdictStatus::ExactCount:
            if (!out.lower || !out.upper || *out.lower != *out.upper ||
                *out.lower < 2)
                fail("exact count bounds");
            break;
        case VerdictStatus::Bounds:
            if (!out.lower || !out.upper || *out.lower < 2 ||
                *out.lower >= *out.upper)
                fail("ranged bounds");
            break;
        case VerdictStatus::Unknown:
            if (out.lower != 1) fail("unknown without trivial lower bound");
            if (out.upper && *out.upper < 2) fail("unknown with decisive upper bound");
            break;
    }
}

} // namespace

Verdict analyze(const Series& f, const Config& cfg, PolyValuationMode mode) {
    ZPowerSplit zp = strip_z(f, cfg.zpower_probe);

    // Instrumented view of the tail: records the highest index any
    // criterion actually reads, for honest window reporting.
    auto deepest = std::make_shared<std::size_t>(0);
    Series tail = detail::make_series_from_rule(
        f.ring(), [inner = zp.tail, deepest](std::size_t i) {
            if (i > *deepest) *deepest = i;
            return inner.coeff(i);
        });

    Verdict out;
    out.z_power = zp.power;

    RingElem a0 = tail.coeff(0);
    if (a0.is_unit()) {
        out.status = VerdictStatus::Unit;
        out.lower = out.upper = 0;
    } else if (f.ring() == RingTag::polyq) {
        analyze_polyq(tail, cfg, mode, out);
    } else {
        analyze_factored(tail, f.ring(), cfg, out);
    }

    out.window = zp.power + *deepest;
    check_consistency(out);
    return out;
}

} // namespace seriesfact
