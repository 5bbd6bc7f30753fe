#include "cuboid/int_polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "cuboid/errors.hpp"

namespace cuboid {
namespace {

// Dense polynomial over Q, low degree first, no high zero coefficients.
// The empty vector is the zero polynomial.
using RatPoly = std::vector<Rational>;

RatPoly trimmed(RatPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

Rational rp_eval(const RatPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

RatPoly rp_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(Rational(static_cast<long>(k)) * p[k]);
    return trimmed(std::move(d));
}

// Positive scaling only: Sturm sign patterns must survive normalization.
RatPoly rp_normalize_positive(RatPoly p) {
    if (p.empty()) return p;
    Rational s = Rational(1) / abs(p.back());
    for (auto& c : p) c *= s;
    return p;
}

RatPoly rp_monic(RatPoly p) {
    if (p.empty()) return p;
    Rational s = Rational(1) / p.back();
    for (auto& c : p) c *= s;
    return p;
}

RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    while (deg(a) >= deg(b)) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
        a = trimmed(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

RatPoly rp_divexact(const RatPoly& a, const RatPoly& b) {
    RatPoly rem = a, quot(a.size(), Rational(0));
    while (deg(rem) >= deg(b)) {
        Rational q = rem.back() / b.back();
        std::size_t shift = rem.size() - b.size();
        quot[shift] = q;
        for (std::size_t k = 0; k < b.size(); ++k) rem[k + shift] -= q * b[k];
        rem = trimmed(std::move(rem));
        if (rem.empty()) break;
    }
    if (!rem.empty())
        throw std::logic_error("polynomial division expected to be exact");
    return trimmed(std::move(quot));
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
    a = trimmed(std::move(a));
    b = trimmed(std::move(b));
    while (!b.empty()) {
        RatPoly r = rp_rem(a, b);
        a = std::move(b);
        b = rp_normalize_positive(std::move(r));
    }
    return a.empty() ? a : rp_monic(std::move(a));
}

struct SquarefreeFactor {
    RatPoly poly;  // monic, squarefree, nonconstant
    int multiplicity;
};

// Yun's squarefree decomposition over Q (characteristic 0).
std::vector<SquarefreeFactor> yun_decompose(const RatPoly& input) {
    std::vector<SquarefreeFactor> out;
    RatPoly f = rp_monic(trimmed(input));
    if (deg(f) < 1) return out;
    RatPoly df = rp_derivative(f);
    RatPoly g = rp_gcd(f, df);
    if (deg(g) == 0) {
        out.push_back({f, 1});
        return out;
    }
    RatPoly w = rp_divexact(f, g);
    RatPoly y = rp_divexact(df, g);
    RatPoly z = trimmed([&] {
        RatPoly dw = rp_derivative(w), t = y;
        t.resize(std::max(t.size(), dw.size()), Rational(0));
        for (std::size_t k = 0; k < dw.size(); ++k) t[k] -= dw[k];
        return t;
    }());
    int i = 1;
    while (deg(w) > 0) {
        RatPoly ai = z.empty() ? w : rp_gcd(w, z);
        if (deg(ai) > 0) out.push_back({rp_monic(ai), i});
        w = rp_divexact(w, ai);
        y = z.empty() ? RatPoly{} : rp_divexact(z, ai);
        RatPoly dw = rp_derivative(w), t = y;
        t.resize(std::max(t.size(), dw.size()), Rational(0));
        for (std::size_t k = 0; k < dw.size(); ++k) t[k] -= dw[k];
        z = trimmed(std::move(t));
        ++i;
    }
    return out;
}

// Strict upper bound on the magnitude of every real root.
Rational cauchy_bound(const RatPoly& f) {
    Rational m(0);
    for (std::size_t k = 0; k + 1 < f.size(); ++k)
        m = std::max(m, abs(f[k]) / abs(f.back()));
    return Rational(1) + m;
}

struct SturmChain {
    std::vector<RatPoly> seq;

    explicit SturmChain(const RatPoly& f) {
        seq.push_back(f);
        RatPoly d = rp_derivative(f);
        if (!d.empty()) seq.push_back(std::move(d));
        while (seq.size() >= 2 && deg(seq.back()) > 0) {
            RatPoly r = rp_rem(seq[seq.size() - 2], seq.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            seq.push_back(rp_normalize_positive(std::move(r)));
        }
    }

    int variations(const Rational& x) const {
        int count = 0, prev = 0;
        for (const auto& p : seq) {
            int s = rp_eval(p, x).sign();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }
};

struct Isolation {
    std::vector<Rational> exact;  // rational roots discovered outright
    // Open intervals with non-root endpoints, exactly one real root each,
    // stored with the sign of f at the left endpoint.
    struct Interval {
        Rational lo, hi;
        int sign_lo;
    };
    std::vector<Interval> intervals;
};

// f monic squarefree, deg >= 1.  Exact roots hit by a bisection point cause a
// deflation and a restart on the quotient, keeping interval endpoints
// root-free by construction.
Isolation isolate_real_roots(RatPoly f) {
    Isolation out;
restart:
    if (deg(f) == 1) {
        out.exact.push_back(-f[0] / f[1]);
        return out;
    }
    SturmChain chain(f);
    Rational bound = cauchy_bound(f);
    struct Item {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Item> work{{-bound, bound, chain.variations(-bound), chain.variations(bound)}};
    std::vector<Isolation::Interval> found;
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        int n = it.vlo - it.vhi;
        if (n <= 0) continue;
        if (n == 1) {
            found.push_back({it.lo, it.hi, rp_eval(f, it.lo).sign()});
            continue;
        }
        Rational mid = (it.lo + it.hi) / 2;
        if (rp_eval(f, mid).is_zero()) {
            out.exact.push_back(mid);
            f = rp_divexact(f, RatPoly{-mid, Rational(1)});
            goto restart;  // quotient shares no roots with what we recorded
        }
        int vm = chain.variations(mid);
        work.push_back({it.lo, mid, it.vlo, vm});
        work.push_back({mid, it.hi, vm, it.vhi});
    }
    out.intervals = std::move(found);
    return out;
}

// One bisection step; returns the root if the midpoint lands on it exactly.
std::optional<Rational> refine_step(const RatPoly& f, Isolation::Interval& iv) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int s = rp_eval(f, mid).sign();
    if (s == 0) return mid;
    if (s == iv.sign_lo)
        iv.lo = mid;
    else
        iv.hi = mid;
    return std::nullopt;
}

std::optional<Rational> refine_below(const RatPoly& f, Isolation::Interval& iv,
                                     const Rational& width) {
    while (iv.hi - iv.lo >= width) {
        if (auto r = refine_step(f, iv)) return r;
    }
    return std::nullopt;
}

// Minimal-denominator rational in the closed interval [lo, hi] (the
// continued-fraction / Stern-Brocot walk).
Rational simplest_in(const Rational& lo, const Rational& hi) {
    if (lo == hi) return lo;
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_in(-hi, -lo);
    // 0 < lo < hi
    Integer ceil_lo, floor_hi;
    mpz_cdiv_q(ceil_lo.get_mpz_t(), lo.numerator().get_mpz_t(), lo.denominator().get_mpz_t());
    mpz_fdiv_q(floor_hi.get_mpz_t(), hi.numerator().get_mpz_t(), hi.denominator().get_mpz_t());
    if (ceil_lo <= floor_hi) return Rational(ceil_lo);
    Rational n(floor_hi);  // == floor(lo) here
    return n + Rational(1) / simplest_in(Rational(1) / (hi - n), Rational(1) / (lo - n));
}

RatPoly from_int_poly(const IntPolynomial& p) {
    RatPoly out;
    out.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) out.push_back(Rational(c));
    return trimmed(std::move(out));
}

// Splits off x^k: returns the multiplicity of the root 0 and shifts the rest.
int strip_zero_root(RatPoly& f) {
    std::size_t k = 0;
    while (k < f.size() && f[k].is_zero()) ++k;
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
    return static_cast<int>(k);
}

}  // namespace

std::pair<IntPolynomial, Rational> to_integer_polynomial(const std::vector<Rational>& coeffs) {
    if (coeffs.empty())
        throw domain_error("indeterminate", "empty coefficient list");
    Integer den_lcm = 1;
    for (const auto& c : coeffs)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Integer> scaled;
    scaled.reserve(coeffs.size());
    Integer content = 0;
    for (const auto& c : coeffs) {
        Integer v = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        scaled.push_back(std::move(v));
    }
    if (content == 0) {
        // zero polynomial: keep the shape, scale 1
        return {IntPolynomial{std::move(scaled)}, Rational(1)};
    }
    for (auto& v : scaled) v /= content;
    return {IntPolynomial{std::move(scaled)}, Rational(content, den_lcm)};
}

std::vector<Rational> rational_roots(const IntPolynomial& p) {
    if (p.is_zero())
        throw domain_error("indeterminate", "rational_roots of the zero polynomial");
    RatPoly f = from_int_poly(p);
    std::vector<Rational> roots;
    int zero_mult = strip_zero_root(f);
    for (int i = 0; i < zero_mult; ++i) roots.push_back(Rational(0));

    if (deg(f) >= 1) {
        // Any rational root n/d of p (lowest terms) has d dividing the leading
        // coefficient; below this interval width two such fractions cannot
        // coexist, so the simplest rational in the interval is the only
        // candidate left.
        Rational lc_bound(abs(p.leading()));
        Rational width = Rational(1) / (Rational(2) * lc_bound * lc_bound);
        for (const auto& factor : yun_decompose(f)) {
            std::vector<Rational> factor_roots;
            if (deg(factor.poly) == 1) {
                factor_roots.push_back(-factor.poly[0] / factor.poly[1]);
            } else {
                Isolation iso = isolate_real_roots(factor.poly);
                factor_roots = iso.exact;
                for (auto iv : iso.intervals) {
                    if (auto hit = refine_below(factor.poly, iv, width)) {
                        factor_roots.push_back(*hit);
                        continue;
                    }
                    Rational candidate = simplest_in(iv.lo, iv.hi);
                    if (rp_eval(factor.poly, candidate).is_zero())
                        factor_roots.push_back(candidate);
                }
            }
            for (const auto& r : factor_roots)
                for (int i = 0; i < factor.multiplicity; ++i) roots.push_back(r);
        }
    }

    for (const auto& r : roots)
        if (!p.eval(r).is_zero())
            throw std::logic_error("uncertified rational root candidate");
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<RealRoot> real_roots(const IntPolynomial& p, int precision_digits) {
    if (p.is_zero())
        throw domain_error("indeterminate", "real_roots of the zero polynomial");
    mpfr_prec_t bits = digits_to_bits(precision_digits);
    RatPoly f = from_int_poly(p);
    // Enclosure target from the precision contract.
    Rational width = Rational(1, 10).pow_int(static_cast<long>(precision_digits) - 5);

    struct Enclosure {
        Rational lo, hi;
        int sign_lo;  // meaningless for exact points (lo == hi)
        bool is_exact;
        std::size_t factor_id;
        int multiplicity;
    };
    std::vector<Enclosure> enc;
    int zero_mult = strip_zero_root(f);
    if (zero_mult > 0)
        enc.push_back({Rational(0), Rational(0), 0, true, 0, zero_mult});

    std::vector<SquarefreeFactor> factors;
    if (deg(f) >= 1) factors = yun_decompose(f);
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
        const auto& factor = factors[fi];
        Isolation iso;
        if (deg(factor.poly) == 1)
            iso.exact.push_back(-factor.poly[0] / factor.poly[1]);
        else
            iso = isolate_real_roots(factor.poly);
        for (const auto& r : iso.exact)
            enc.push_back({r, r, 0, true, fi + 1, factor.multiplicity});
        for (auto iv : iso.intervals) {
            if (auto hit = refine_below(factor.poly, iv, width)) {
                enc.push_back({*hit, *hit, 0, true, fi + 1, factor.multiplicity});
            } else {
                enc.push_back({iv.lo, iv.hi, iv.sign_lo, false, fi + 1, factor.multiplicity});
            }
        }
    }

    // Distinct factors are coprime, so their roots differ; shrink enclosures
    // until they are pairwise disjoint and the sort order is certain.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < enc.size(); ++i) {
            for (std::size_t j = i + 1; j < enc.size(); ++j) {
                if (enc[i].factor_id == enc[j].factor_id) continue;
                if (enc[i].lo < enc[j].hi && enc[j].lo < enc[i].hi) {
                    for (auto* e : {&enc[i], &enc[j]}) {
                        if (e->is_exact) continue;
                        Isolation::Interval iv{e->lo, e->hi, e->sign_lo};
                        const RatPoly& fp = factors[e->factor_id - 1].poly;
                        if (auto hit = refine_step(fp, iv)) {
                            e->lo = e->hi = *hit;
                            e->is_exact = true;
                        } else {
                            e->lo = iv.lo;
                            e->hi = iv.hi;
                            e->sign_lo = iv.sign_lo;
                        }
                        changed = true;
                    }
                }
            }
        }
    }

    std::sort(enc.begin(), enc.end(), [](const Enclosure& a, const Enclosure& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });

    std::vector<RealRoot> out;
    out.reserve(enc.size());
    for (const auto& e : enc) {
        Rational mid = e.is_exact ? e.lo : (e.lo + e.hi) / 2;
        out.push_back({BigReal::from_rational(mid, bits), e.multiplicity});
    }
    return out;
}

}  // namespace cuboid
