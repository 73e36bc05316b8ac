#pragma once

// Desk-scale verification sweeps: formulas against brute force, the
// condensation recurrence, forced reductions, and the identity lemmas.

#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qhex/formulas.hpp"
#include "qhex/lattice.hpp"
#include "qhex/matching.hpp"

namespace qhex {

struct CheckRecord {
    std::string check;
    std::string params;
    std::string expected;
    std::string actual;
    bool pass = false;
    long long micros = 0;
};

struct CheckReport {
    std::uint64_t seed = 0;
    std::vector<CheckRecord> records;

    bool all_pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& r : records)
            if (!r.pass) n++;
        return n;
    }

    void sort() {
        std::sort(records.begin(), records.end(),
                  [](const CheckRecord& a, const CheckRecord& b) {
                      if (a.check != b.check) return a.check < b.check;
                      return a.params < b.params;
                  });
    }

    void write_lines(std::ostream& os) const {
        for (const auto& r : records)
            os << r.check << " | " << r.params << " | expected=" << r.expected
               << " actual=" << r.actual << " | "
               << (r.pass ? "pass" : "FAIL") << "\n";
        os << "summary: " << records.size() << " checks, " << failures()
           << " failures, seed=" << seed << "\n";
    }

    void write_csv(std::ostream& os) const {
        os << "check,params,expected,actual,pass,micros\n";
        for (const auto& r : records) {
            auto quote = [](const std::string& s) {
                std::string out = "\"";
                for (char ch : s) {
                    if (ch == '"') out += '"';
                    out += ch;
                }
                return out + "\"";
            };
            os << quote(r.check) << "," << quote(r.params) << ","
               << quote(r.expected) << "," << quote(r.actual) << ","
               << (r.pass ? 1 : 0) << "," << r.micros << "\n";
        }
    }
};

enum class DentPolicy { AllSubsets, SampleWithSeed, InitialSegments };

struct SweepSpec {
    int max_a = 2;
    int max_c = 3;
    int max_k = 2;
    int hex_max = 3;       // hexagon side bound for the triple-product check
    int proctor_max_a = 3;
    int proctor_max_b = 4;
    int identity_max = 10;
    int ratio_lemma_instances = 500;
    DentPolicy dent_policy = DentPolicy::AllSubsets;
    std::size_t subset_full_threshold = 200;
    std::size_t subset_sample_size = 50;
    std::uint64_t seed = 1;
    std::vector<std::string> checks;  // empty = every check
    std::string output_path;          // empty = no file written

    bool wants(const std::string& name) const {
        if (checks.empty()) return true;
        return std::find(checks.begin(), checks.end(), name) != checks.end();
    }
};

namespace detail {

inline std::string params_str(int a, int b, int c,
                              const std::vector<int>& dents) {
    std::string s = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                    " c=" + std::to_string(c) + " dents=";
    if (dents.empty()) s += "-";
    for (std::size_t i = 0; i < dents.size(); i++)
        s += (i ? "," : "") + std::to_string(dents[i]);
    return s;
}

template <class F>
void timed_record(CheckReport& rep, std::string check, std::string params,
                  F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    auto [expected, actual] = body();
    auto t1 = std::chrono::steady_clock::now();
    CheckRecord r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.expected = expected;
    r.actual = actual;
    r.pass = expected == actual;
    r.micros =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    rep.records.push_back(std::move(r));
}

inline std::vector<std::vector<int>> all_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 1);
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (k > n) return out;
    while (true) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - (k - 1 - i)) i--;
        if (i < 0) break;
        pick[i]++;
        for (int j = i + 1; j < k; j++) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

// Dent subsets of {1..n} of size k, full when the count stays under the
// threshold, otherwise a seeded sample (or initial segment only).
inline std::vector<std::vector<int>> dent_subsets(int n, int k,
                                                  const SweepSpec& spec,
                                                  std::mt19937_64& rng) {
    if (spec.dent_policy == DentPolicy::InitialSegments) {
        std::vector<int> seg(k);
        std::iota(seg.begin(), seg.end(), 1);
        if (k > n) return {};
        return {seg};
    }
    double total = 1;
    for (int i = 0; i < k; i++) total *= (double)(n - i) / (i + 1);
    if (spec.dent_policy == DentPolicy::AllSubsets ||
        total <= (double)spec.subset_full_threshold)
        return all_subsets(n, k);
    std::set<std::vector<int>> sample;
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    while (sample.size() < spec.subset_sample_size) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> pick(pool.begin(), pool.begin() + k);
        std::sort(pick.begin(), pick.end());
        sample.insert(std::move(pick));
    }
    return {sample.begin(), sample.end()};
}

// Base up-triangle of the quartered region at dent position s.
inline TriRef base_cell(int a, int b, int c, int s) {
    int r0 = b + c - 1;
    int first = (r0 % 2 == 0) ? 2 * a + 2 : 2 * a + 3;
    return {r0, first + 2 * (s - 1)};
}

}  // namespace detail

struct RecurrenceResult {
    bool holds = false;
    std::array<Count, 6> counts;  // L1..L6 below
};

// Brute-force check of
//   L(R(a,b,c; s1..sk)) L(R(a,b-2,c; s2..sk)) =
//     L(R(a,b-1,c+1; s2..sk)) L(R(a,b-1,c-1; s1..sk))
//   + L(R(a+1,b-2,c; s2..sk)) L(R(a-1,b,c; s1..sk))
inline RecurrenceResult recurrence_check(int a, int b, int c,
                                         const std::vector<int>& dents) {
    QHParams p{a, b, c, dents};
    p.validate();
    if (a < 1 || b < 2 || c < 1 || dents.empty())
        throw std::invalid_argument("recurrence_check: needs a,c,k >= 1, b >= 2");
    if (dents.back() >= p.d())
        throw std::invalid_argument("recurrence_check: needs s_k < d");
    std::vector<int> rest(dents.begin() + 1, dents.end());

    RecurrenceResult res;
    res.counts[0] = count_tilings(build_quartered(a, b, c, dents));
    res.counts[1] = count_tilings(build_quartered(a, b - 2, c, rest));
    res.counts[2] = count_tilings(build_quartered(a, b - 1, c + 1, rest));
    res.counts[3] = count_tilings(build_quartered(a, b - 1, c - 1, dents));
    res.counts[4] = count_tilings(build_quartered(a + 1, b - 2, c, rest));
    res.counts[5] = count_tilings(build_quartered(a - 1, b, c, dents));
    res.holds = res.counts[0] * res.counts[1] ==
                res.counts[2] * res.counts[3] + res.counts[4] * res.counts[5];
    return res;
}

struct KuoInstance {
    Region base;  // quartered region with the first dent filled back in
    int x = 0, y = 0, z = 0, t = 0;
};

// The condensation setup behind the recurrence: fill dent s1 back in,
// mark x at base position d, y at base position s1, and z (down) and
// t (up) at the two cells hugging the top-right corner.
inline KuoInstance make_kuo_instance(int a, int b, int c,
                                     const std::vector<int>& dents) {
    QHParams p{a, b, c, dents};
    p.validate();
    if (a < 1 || b < 2 || c < 1 || dents.empty())
        throw std::invalid_argument("make_kuo_instance: needs a,c,k >= 1, b >= 2");
    if (dents.back() >= p.d())
        throw std::invalid_argument("make_kuo_instance: needs s_k < d");

    Region dented = build_quartered(p);
    std::vector<TriRef> cells = dented.cells();
    cells.push_back(detail::base_cell(a, b, c, dents.front()));
    KuoInstance inst;
    inst.base = Region(std::move(cells), dented.label() + " [+s1]");

    int m = inst.base.cells().front().col;
    for (const TriRef& t : inst.base.cells())
        if (t.row == 0) m = std::max(m, t.col);
    DualGraph g = dual_graph(inst.base);
    inst.x = g.index_of(detail::base_cell(a, b, c, p.d()));
    inst.y = g.index_of(detail::base_cell(a, b, c, dents.front()));
    inst.z = g.index_of({0, m - 1});
    inst.t = g.index_of({0, m - 2});
    return inst;
}

// Count-and-shape comparison of two regions after reducing both to
// their forced-lozenge fixpoints.
inline bool reduces_to(const Region& lhs, const Region& rhs) {
    Region rl = normalize_translation(remove_forced(lhs).first);
    Region rr = normalize_translation(remove_forced(rhs).first);
    return rl.cells() == rr.cells() &&
           count_tilings(lhs) == count_tilings(rhs);
}

// c = 0 collapse: R(a, b, 0; s1..sk) reduces to R(s_k - k, b-1, 1; s1..s_{k-1}).
inline bool special_case_floor(int a, int b, const std::vector<int>& dents) {
    QHParams p{a, b, 0, dents};
    p.validate();
    if (dents.empty())
        throw std::invalid_argument("special_case_floor: needs k >= 1");
    int k = p.k();
    std::vector<int> rest(dents.begin(), dents.end() - 1);
    return reduces_to(build_quartered(p),
                      build_quartered(dents.back() - k, b - 1, 1, rest));
}

// s_k = d collapse: R(a, b, c; s1..sk) reduces to R(a, b-1, c+1; s1..s_{k-1}).
inline bool special_case_max_dent(int a, int b, int c,
                                  const std::vector<int>& dents) {
    QHParams p{a, b, c, dents};
    p.validate();
    if (dents.empty() || dents.back() != p.d())
        throw std::invalid_argument("special_case_max_dent: needs s_k = d");
    std::vector<int> rest(dents.begin(), dents.end() - 1);
    return reduces_to(build_quartered(p),
                      build_quartered(a, b - 1, c + 1, rest));
}

// For each trimmed hexagon P(a,b,c) in range, record whether its count
// matches the quartered region with initial-segment dents 1..k.
inline CheckReport correspondence_probe(int max_a, int max_b, int max_c) {
    CheckReport rep;
    for (int a = 0; a <= max_a; a++) {
        for (int b = 0; b <= max_b; b++) {
            for (int c = 0; c <= std::min(b, max_c); c++) {
                int k = (b - c + 1) / 2;
                std::vector<int> dents(k);
                std::iota(dents.begin(), dents.end(), 1);
                detail::timed_record(
                    rep, "correspondence",
                    detail::params_str(a, b, c, dents),
                    [&] {
                        Count lhs =
                            count_tilings(build_staircase_trimmed(a, b, c));
                        Count rhs =
                            count_tilings(build_quartered(a, b, c, dents));
                        return std::pair(lhs.str(), rhs.str());
                    });
            }
        }
    }
    rep.sort();
    return rep;
}

namespace detail {

inline void sweep_macmahon(const SweepSpec& spec, CheckReport& rep) {
    for (int a = 0; a <= spec.hex_max; a++)
        for (int b = 0; b <= spec.hex_max; b++)
            for (int c = 0; c <= spec.hex_max; c++)
                timed_record(rep, "macmahon", params_str(a, b, c, {}), [&] {
                    return std::pair(macmahon_count(a, b, c).str(),
                                     count_tilings(build_hexagon(a, b, c)).str());
                });
}

inline void sweep_proctor(const SweepSpec& spec, CheckReport& rep) {
    auto one = [&](int a, int b, int c) {
        timed_record(rep, "proctor", params_str(a, b, c, {}), [&] {
            return std::pair(
                proctor_count(a, b, c).str(),
                count_tilings(build_staircase_trimmed(a, b, c)).str());
        });
    };
    for (int a = 0; a <= spec.proctor_max_a; a++)
        for (int b = 0; b <= spec.proctor_max_b; b++)
            for (int c = 0; c <= b; c++) one(a, b, c);
    one(3, 6, 4);
}

template <class Fn>
void for_each_quartered(const SweepSpec& spec, bool odd, Fn&& fn) {
    std::mt19937_64 rng(spec.seed);
    for (int a = 0; a <= spec.max_a; a++) {
        for (int c = 0; c <= spec.max_c; c++) {
            for (int k = 0; k <= spec.max_k; k++) {
                int b = odd ? c + 2 * k - 1 : c + 2 * k;
                if (b < 0) continue;
                int dmax = a + k;
                for (const auto& dents : dent_subsets(dmax, k, spec, rng))
                    fn(a, b, c, dents);
            }
        }
    }
}

inline void sweep_theorem(const SweepSpec& spec, bool odd, CheckReport& rep) {
    for_each_quartered(spec, odd,
                       [&](int a, int b, int c, const std::vector<int>& dents) {
                           timed_record(
                               rep, odd ? "quartered-odd" : "quartered-even",
                               params_str(a, b, c, dents), [&] {
                                   QHParams p{a, b, c, dents};
                                   Count fm = odd ? formula_odd(p)
                                                  : formula_even(p);
                                   Count bf =
                                       count_tilings(build_quartered(p));
                                   return std::pair(fm.str(), bf.str());
                               });
                       });
}

inline void sweep_recurrence(const SweepSpec& spec, CheckReport& rep) {
    for_each_quartered(
        spec, true, [&](int a, int b, int c, const std::vector<int>& dents) {
            if (a < 1 || c < 1 || dents.empty()) return;
            QHParams p{a, b, c, dents};
            if (dents.back() >= p.d()) return;
            timed_record(rep, "recurrence", params_str(a, b, c, dents), [&] {
                auto res = recurrence_check(a, b, c, dents);
                return std::pair(std::string("holds"),
                                 std::string(res.holds ? "holds" : "fails"));
            });
        });
}

inline void sweep_kuo(const SweepSpec& spec, CheckReport& rep) {
    for_each_quartered(
        spec, true, [&](int a, int b, int c, const std::vector<int>& dents) {
            if (a < 1 || c < 1 || dents.empty()) return;
            QHParams p{a, b, c, dents};
            if (dents.back() >= p.d()) return;
            timed_record(rep, "kuo", params_str(a, b, c, dents), [&] {
                KuoInstance inst = make_kuo_instance(a, b, c, dents);
                DualGraph g = dual_graph(inst.base);
                KuoResult kr = kuo_condensation_check(g, inst.x, inst.y,
                                                      inst.z, inst.t);
                RecurrenceResult rr = recurrence_check(a, b, c, dents);
                bool ok = kr.holds;
                for (int i = 0; i < 6; i++)
                    ok = ok && kr.counts[i] == rr.counts[i];
                return std::pair(std::string("holds+match"),
                                 std::string(ok ? "holds+match" : "fails"));
            });
        });
}

inline void sweep_reduction(const SweepSpec& spec, CheckReport& rep) {
    auto invariant = [&](const Region& r, const char* tag) {
        timed_record(rep, std::string("reduction-") + tag, r.label(), [&] {
            Count before = count_tilings(r);
            Count after = count_tilings(remove_forced(r).first);
            return std::pair(before.str(), after.str());
        });
    };
    for (int a = 0; a <= spec.hex_max; a++)
        for (int b = 0; b <= spec.hex_max; b++)
            for (int c = 0; c <= spec.hex_max; c++)
                invariant(build_hexagon(a, b, c), "hexagon");
    for (int a = 0; a <= spec.proctor_max_a; a++)
        for (int b = 0; b <= spec.proctor_max_b; b++)
            for (int c = 0; c <= b; c++)
                invariant(build_staircase_trimmed(a, b, c), "staircase");
    for (bool odd : {true, false})
        for_each_quartered(spec, odd,
                           [&](int a, int b, int c,
                               const std::vector<int>& dents) {
                               invariant(build_quartered(a, b, c, dents),
                                         "quartered");
                           });
}

inline void sweep_special_cases(const SweepSpec& spec, CheckReport& rep) {
    std::mt19937_64 rng(spec.seed);
    for (int a = 0; a <= spec.max_a + 1; a++) {
        for (int k = 1; k <= spec.max_k; k++) {
            int b = 2 * k - 1;
            for (const auto& dents : dent_subsets(a + k, k, spec, rng)) {
                if (dents.back() - k < 0) continue;
                timed_record(rep, "special-floor", params_str(a, b, 0, dents),
                             [&] {
                                 bool ok = special_case_floor(a, b, dents);
                                 return std::pair(std::string("reduces"),
                                                  std::string(ok ? "reduces"
                                                                 : "fails"));
                             });
            }
        }
    }
    for (int a = 0; a <= spec.max_a; a++) {
        for (int c = 1; c <= spec.max_c; c++) {
            for (int k = 1; k <= spec.max_k; k++) {
                int b = c + 2 * k - 1;
                int d = a + k;
                for (const auto& rest : dent_subsets(d - 1, k - 1, spec, rng)) {
                    std::vector<int> dents = rest;
                    dents.push_back(d);
                    timed_record(rep, "special-max-dent",
                                 params_str(a, b, c, dents), [&] {
                                     bool ok = special_case_max_dent(a, b, c,
                                                                     dents);
                                     return std::pair(
                                         std::string("reduces"),
                                         std::string(ok ? "reduces" : "fails"));
                                 });
                }
            }
        }
    }
}

inline void sweep_base_cases(const SweepSpec& spec, CheckReport& rep) {
    for (bool odd : {true, false})
        for_each_quartered(spec, odd,
                           [&](int a, int b, int c,
                               const std::vector<int>& dents) {
                               if (a != 0) return;
                               timed_record(
                                   rep, "base-case",
                                   params_str(a, b, c, dents), [&] {
                                       Count n = count_tilings(
                                           build_quartered(a, b, c, dents));
                                       return std::pair(std::string("1"),
                                                        n.str());
                                   });
                           });
    for (int a = 0; a <= spec.max_a; a++)
        timed_record(rep, "base-case", params_str(a, 0, 1, {}), [&] {
            Count n = count_tilings(build_quartered(a, 0, 1, {}));
            return std::pair(std::string("1"), n.str());
        });
}

inline void sweep_identity(const SweepSpec& spec, CheckReport& rep) {
    for (long long d = 2; d <= spec.identity_max; d++)
        for (long long s1 = 1; s1 < d; s1++)
            for (long long c = 0; c <= spec.identity_max; c++)
                timed_record(rep, "identity",
                             "s1=" + std::to_string(s1) +
                                 " d=" + std::to_string(d) +
                                 " c=" + std::to_string(c),
                             [&] {
                                 bool ok = identity_check(s1, d, c);
                                 return std::pair(std::string("true"),
                                                  std::string(ok ? "true"
                                                                 : "false"));
                             });
}

inline void sweep_ratio_lemmas(const SweepSpec& spec, CheckReport& rep) {
    std::mt19937_64 rng(spec.seed);
    for (int i = 0; i < spec.ratio_lemma_instances; i++) {
        std::uniform_int_distribution<int> len_dist(2, 8);
        int len = len_dist(rng);
        std::set<long long> vals;
        std::uniform_int_distribution<long long> val_dist(1, 60);
        while ((int)vals.size() < len + 1) vals.insert(val_dist(rng));
        std::vector<long long> pool(vals.begin(), vals.end());
        std::uniform_int_distribution<int> pos_dist(1, len - 1);
        int dpos = pos_dist(rng);
        long long d = pool[dpos];
        std::vector<long long> s;
        for (int j = 0; j <= len; j++)
            if (j != dpos) s.push_back(pool[j]);
        timed_record(rep, "ratio-lemma",
                     "instance=" + std::to_string(i), [&] {
                         bool ok = ratio_lemma_check(s, d);
                         return std::pair(std::string("true"),
                                          std::string(ok ? "true" : "false"));
                     });
    }
}

inline void sweep_ratio_form(const SweepSpec& spec, CheckReport& rep) {
    for_each_quartered(spec, true,
                       [&](int a, int b, int c, const std::vector<int>& dents) {
                           timed_record(
                               rep, "ratio-form", params_str(a, b, c, dents),
                               [&] {
                                   QHParams p{a, b, c, dents};
                                   Ratio r = formula_ratio_form(p);
                                   Count f = formula_odd(p);
                                   return std::pair(Ratio(f).str(), r.str());
                               });
                       });
}

}  // namespace detail

inline CheckReport run_sweep(const SweepSpec& spec) {
    CheckReport rep;
    rep.seed = spec.seed;
    if (spec.wants("macmahon")) detail::sweep_macmahon(spec, rep);
    if (spec.wants("proctor")) detail::sweep_proctor(spec, rep);
    if (spec.wants("quartered-odd")) detail::sweep_theorem(spec, true, rep);
    if (spec.wants("quartered-even")) detail::sweep_theorem(spec, false, rep);
    if (spec.wants("recurrence")) detail::sweep_recurrence(spec, rep);
    if (spec.wants("kuo")) detail::sweep_kuo(spec, rep);
    if (spec.wants("reduction")) detail::sweep_reduction(spec, rep);
    if (spec.wants("special-cases")) detail::sweep_special_cases(spec, rep);
    if (spec.wants("base-cases")) detail::sweep_base_cases(spec, rep);
    if (spec.wants("identity")) detail::sweep_identity(spec, rep);
    if (spec.wants("ratio-lemmas")) detail::sweep_ratio_lemmas(spec, rep);
    if (spec.wants("ratio-form")) detail::sweep_ratio_form(spec, rep);
    rep.sort();
    if (!spec.output_path.empty()) {
        std::ofstream lines(spec.output_path);
        if (!lines)
            throw std::runtime_error("run_sweep: cannot write " +
                                     spec.output_path);
        rep.write_lines(lines);
        std::ofstream csv(spec.output_path + ".csv");
        if (!csv)
            throw std::runtime_error("run_sweep: cannot write " +
                                     spec.output_path + ".csv");
        rep.write_csv(csv);
    }
    return rep;
}

}  // namespace qhex
