#pragma once

// Exact closed-form counts and the algebraic identities behind them.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qhex/lattice.hpp"
#include "qhex/matching.hpp"

namespace qhex {

using Ratio = boost::multiprecision::cpp_rational;

namespace detail {

inline void require_increasing(const std::vector<long long>& a,
                               const char* who) {
    for (std::size_t i = 1; i < a.size(); i++)
        if (a[i] <= a[i - 1])
            throw std::invalid_argument(std::string(who) +
                                        ": input must be strictly increasing");
}

inline Count integral(const Ratio& r, const char* who) {
    if (denominator(r) != 1)
        throw std::logic_error(std::string(who) +
                               ": product did not reduce to an integer");
    return numerator(r);
}

}  // namespace detail

// Product of pairwise differences s_j - s_i over i < j; 1 when |A| <= 1.
inline Count delta_op(const std::vector<long long>& a) {
    detail::require_increasing(a, "delta_op");
    Count v = 1;
    for (std::size_t i = 0; i < a.size(); i++)
        for (std::size_t j = i + 1; j < a.size(); j++) v *= a[j] - a[i];
    return v;
}

// Product of s_i + s_j - 1 over i < j; 1 when |A| <= 1.
inline Count star_op(const std::vector<long long>& a) {
    detail::require_increasing(a, "star_op");
    Count v = 1;
    for (std::size_t i = 0; i < a.size(); i++)
        for (std::size_t j = i + 1; j < a.size(); j++) v *= a[i] + a[j] - 1;
    return v;
}

// Count for the odd family b - c = 2k - 1, over the extended sequence
// S = (s_1..s_k, d+1..d+c):
//   prod_{i<j} (s_j - s_i)/(j - i) * (s_i + s_j - 1)/(i + j - 1)
inline Count formula_odd(const QHParams& p) {
    p.validate();
    if (!p.odd_case())
        throw std::invalid_argument("formula_odd: parity mismatch");
    std::vector<long long> s = p.extended_seq();
    Ratio v = 1;
    for (std::size_t i = 0; i < s.size(); i++) {
        for (std::size_t j = i + 1; j < s.size(); j++) {
            long long oi = (long long)i + 1, oj = (long long)j + 1;
            v *= Ratio(s[j] - s[i], oj - oi);
            v *= Ratio(s[i] + s[j] - 1, oi + oj - 1);
        }
    }
    return detail::integral(v, "formula_odd");
}

// Count for the even family b - c = 2k:
//   prod_i s_i/(2i-1) * prod_{i<j} (s_j - s_i)/(j - i) * (s_i + s_j)/(i + j - 1)
inline Count formula_even(const QHParams& p) {
    p.validate();
    if (p.odd_case())
        throw std::invalid_argument("formula_even: parity mismatch");
    std::vector<long long> s = p.extended_seq();
    Ratio v = 1;
    for (std::size_t i = 0; i < s.size(); i++) {
        long long oi = (long long)i + 1;
        v *= Ratio(s[i], 2 * oi - 1);
        for (std::size_t j = i + 1; j < s.size(); j++) {
            long long oj = (long long)j + 1;
            v *= Ratio(s[j] - s[i], oj - oi);
            v *= Ratio(s[i] + s[j], oi + oj - 1);
        }
    }
    return detail::integral(v, "formula_even");
}

// The odd-case count written as Delta(S)/Delta([k+c]) * Star(S)/Star([k+c]).
inline Ratio formula_ratio_form(const QHParams& p) {
    p.validate();
    if (!p.odd_case())
        throw std::invalid_argument("formula_ratio_form: parity mismatch");
    std::vector<long long> s = p.extended_seq();
    std::vector<long long> base(s.size());
    for (std::size_t i = 0; i < s.size(); i++) base[i] = (long long)i + 1;
    return Ratio(delta_op(s) * star_op(s), delta_op(base) * star_op(base));
}

// Lozenge tilings of the hexagon with sides a, b, c.
inline Count macmahon_count(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("macmahon_count: negative side");
    Ratio v = 1;
    for (long long i = 1; i <= a; i++)
        for (long long j = 1; j <= b; j++)
            for (long long k = 1; k <= c; k++)
                v *= Ratio(i + j + k - 1, i + j + k - 2);
    return detail::integral(v, "macmahon_count");
}

// Lozenge tilings of the staircase-trimmed hexagon P(a,b,c). Equals the
// number of plane partitions of shape (b, b-1, ..., b-c+1) with entries
// at most a; split on the parity of b - c.
inline Count proctor_count(int a, int b, int c) {
    if (b < c)
        throw std::invalid_argument("proctor_count: requires b >= c");
    if (a < 0 || c < 0)
        throw std::invalid_argument("proctor_count: negative parameter");
    Ratio v = 1;
    if (((b - c) % 2 + 2) % 2 == 1) {
        long long k = (b - c + 1) / 2;
        for (long long i = 1; i <= c; i++)
            for (long long j = 1; j <= k; j++) {
                v *= Ratio(a + i + j - 1, i + j - 1);
                v *= Ratio(a + k + i + j - 1, k + i + j - 1);
            }
        for (long long i = 1; i <= c; i++)
            for (long long j = i + 1; j <= c; j++)
                v *= Ratio(2 * a + 2 * k + i + j - 1, 2 * k + i + j - 1);
    } else {
        long long k = (b - c) / 2;
        for (long long i = 1; i <= c; i++) v *= Ratio(a + k + i, k + i);
        for (long long i = 1; i <= k; i++)
            for (long long j = 1; j <= c; j++) {
                v *= Ratio(a + k + j - i, k + j - i);
                v *= Ratio(a + k + i + j, k + i + j);
            }
        for (long long i = 1; i <= c; i++)
            for (long long j = i + 1; j <= c; j++)
                v *= Ratio(2 * a + 2 * k + i + j, 2 * k + i + j);
    }
    return detail::integral(v, "proctor_count");
}

// With m = d + c, checks
//   1 = (m-d)(m+d-1)/((m-s1)(m+s1-1)) + (d-s1)(d+s1-1)/((m-s1)(m+s1-1)).
inline bool identity_check(long long s1, long long d, long long c) {
    if (!(1 <= s1 && s1 < d) || c < 0)
        throw std::invalid_argument("identity_check: needs 1 <= s1 < d, c >= 0");
    long long m = d + c;
    Ratio den = Ratio(m - s1) * Ratio(m + s1 - 1);
    Ratio lhs = Ratio((m - d) * (m + d - 1)) / den +
                Ratio((d - s1) * (d + s1 - 1)) / den;
    return lhs == 1;
}

namespace detail {

inline std::vector<long long> with_d_without(const std::vector<long long>& s,
                                             long long d,
                                             std::vector<long long> drop) {
    std::vector<long long> out;
    for (long long v : s) {
        if (std::find(drop.begin(), drop.end(), v) != drop.end()) continue;
        out.push_back(v);
    }
    if (d > 0) out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Cancellation lemmas used to collapse the condensation recurrence in
// ratio form. S is a strictly increasing sequence with least element s1
// and greatest element sl; d is a non-member strictly between s1 and sl.
// Checks, writing S' for S u {d}:
//   Delta(S'-{s1}) Delta(S-{sl}) / (Delta(S) Delta(S'-{s1,sl})) = (sl-d)/(sl-s1)
//   Delta(S'-{sl}) Delta(S-{s1}) / (Delta(S) Delta(S'-{s1,sl})) = (d-s1)/(sl-s1)
//   Star (S'-{s1}) Star (S-{sl}) / (Star (S) Star (S'-{s1,sl})) = (sl+d-1)/(sl+s1-1)
//   Star (S'-{sl}) Star (S-{s1}) / (Star (S) Star (S'-{s1,sl})) = (d+s1-1)/(sl+s1-1)
inline bool ratio_lemma_check(const std::vector<long long>& s, long long d) {
    detail::require_increasing(s, "ratio_lemma_check");
    if (s.size() < 2)
        throw std::invalid_argument("ratio_lemma_check: need at least 2 elements");
    if (std::find(s.begin(), s.end(), d) != s.end())
        throw std::invalid_argument("ratio_lemma_check: d must not belong to S");
    long long s1 = s.front(), sl = s.back();
    if (!(s1 < d && d < sl))
        throw std::invalid_argument("ratio_lemma_check: d must lie inside S's range");

    using detail::with_d_without;
    auto sd_s1 = with_d_without(s, d, {s1});
    auto sd_sl = with_d_without(s, d, {sl});
    auto sd_both = with_d_without(s, d, {s1, sl});
    auto s_s1 = with_d_without(s, 0, {s1});
    auto s_sl = with_d_without(s, 0, {sl});

    Ratio d_base = Ratio(delta_op(s) * delta_op(sd_both));
    Ratio s_base = Ratio(star_op(s) * star_op(sd_both));
    bool ok = true;
    ok = ok && Ratio(delta_op(sd_s1) * delta_op(s_sl)) / d_base ==
                   Ratio(sl - d, sl - s1);
    ok = ok && Ratio(delta_op(sd_sl) * delta_op(s_s1)) / d_base ==
                   Ratio(d - s1, sl - s1);
    ok = ok && Ratio(star_op(sd_s1) * star_op(s_sl)) / s_base ==
                   Ratio(sl + d - 1, sl + s1 - 1);
    ok = ok && Ratio(star_op(sd_sl) * star_op(s_s1)) / s_base ==
                   Ratio(d + s1 - 1, sl + s1 - 1);
    return ok;
}

}  // namespace qhex
