#include "hmg/graver.hpp"

#include <algorithm>
#include <map>
#include <limits>
#include <numeric>
#include <set>

namespace hmg {

GraverBasis canonicalize(GraverBasis basis) {
    for (auto& v : basis) v = v.canonical();
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return basis;
}

namespace {

Int l1_norm(const SignedVector& v) {
    Int s = 0;
    for (const auto& [c, val] : v.entries) s += val < 0 ? -val : val;
    return s;
}

// Divide by the gcd of the entries.
SignedVector primitive_part(SignedVector v) {
    Int g = 0;
    for (const auto& [c, val] : v.entries) g = gcd_nonneg(g, val);
    if (g > 1)
        for (auto& [c, val] : v.entries) val /= g;
    return v;
}

// Lattice completion for the Graver basis. Elements are stored with
// canonical sign; reducers are indexed by their first support column so a
// normal-form step only scans vectors that could possibly apply.
struct Completion {
    const IntMatrix& a;
    std::vector<SignedVector> pool;
    // per column: ids of pool vectors whose first support entry is at it
    std::vector<std::vector<int>> first_col_index;
    std::optional<SignedVector> witness;  // confirmed element with an entry >= 2
    bool stop_on_witness;
    std::size_t budget;
    std::size_t pair_budget;

    Completion(const IntMatrix& matrix, bool early_stop, std::size_t pool_budget,
               std::size_t pairs)
        : a(matrix),
          first_col_index(matrix.cols()),
          stop_on_witness(early_stop),
          budget(pool_budget),
          pair_budget(pairs) {}

    // One reduction pass: subtract some +-h conformally below s. Returns
    // whether a reducer applied.
    bool reduce_once(SignedVector& s) const {
        for (const auto& [c, val] : s.entries) {
            for (int id : first_col_index[c]) {
                const SignedVector& h = pool[id];
                if (val > 0) {
                    if (h.entries.front().second <= val && conformal_leq(h, s)) {
                        s = subtract(s, h);
                        return true;
                    }
                } else {
                    if (-h.entries.front().second >= val && conformal_leq(h.negated(), s)) {
                        s = add(s, h);
                        return true;
                    }
                }
            }
        }
        return false;
    }

    SignedVector normal_form(SignedVector s) const {
        while (!s.entries.empty() && reduce_once(s)) {}
        return s;
    }

    // Certified non-unimodularity check: if the support-restricted kernel
    // of `s` is one-dimensional, its primitive generator is a circuit, and
    // a circuit with an entry of absolute value >= 2 is a Graver witness.
    void try_certify(const SignedVector& s) {
        if (witness || s.max_abs() < 2) return;
        std::vector<std::size_t> support;
        for (const auto& [c, v] : s.entries) support.push_back(c);
        auto basis = integer_kernel_basis(a.select_columns(support));
        if (basis.size() != 1) return;
        SignedVector g = primitive_part(SignedVector::from_dense(basis[0]));
        if (g.max_abs() < 2) return;
        SignedVector full;
        for (const auto& [idx, v] : g.entries) full.entries.emplace_back(support[idx], v);
        std::sort(full.entries.begin(), full.entries.end());
        witness = full.canonical();
    }

    void insert(SignedVector s) {
        if (pool.size() >= budget)
            throw guard_error("Graver completion exceeded its budget of " +
                              std::to_string(budget) + " vectors");
        s = s.canonical();
        try_certify(s);
        first_col_index[s.entries.front().first].push_back(static_cast<int>(pool.size()));
        pool.push_back(std::move(s));
    }

    void run(const std::vector<std::vector<Int>>& seed) {
        // The pair loop is quadratic in the pool; bound it so that inputs
        // with enormous bases fail fast instead of stalling.
        std::size_t pairs = 0;
        for (const auto& v : seed) {
            SignedVector s = normal_form(SignedVector::from_dense(v));
            if (!s.entries.empty()) insert(s);
            if (witness && stop_on_witness) return;
        }
        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (++pairs > pair_budget)
                    throw guard_error("Graver completion exceeded its pair budget");
                // f+g only matters with a sign conflict, f-g only with a
                // sign agreement; detect both in one support merge.
                bool conflict = false, agree = false;
                {
                    const auto& fe = pool[i].entries;
                    const auto& ge = pool[j].entries;
                    std::size_t x = 0, y = 0;
                    while (x < fe.size() && y < ge.size()) {
                        if (fe[x].first < ge[y].first) ++x;
                        else if (ge[y].first < fe[x].first) ++y;
                        else {
                            ((fe[x].second > 0) == (ge[y].second > 0) ? agree : conflict) = true;
                            ++x;
                            ++y;
                        }
                    }
                }
                if (conflict) {
                    SignedVector s = normal_form(add(pool[i], pool[j]));
                    if (!s.entries.empty()) insert(std::move(s));
                    if (witness && stop_on_witness) return;
                }
                if (agree) {
                    SignedVector s = normal_form(subtract(pool[i], pool[j]));
                    if (!s.entries.empty()) insert(std::move(s));
                    if (witness && stop_on_witness) return;
                }
            }
        }
    }

    // Keep only the conformally minimal elements.
    GraverBasis minimize() const {
        std::vector<std::size_t> order(pool.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            Int nx = l1_norm(pool[x]), ny = l1_norm(pool[y]);
            if (nx != ny) return nx < ny;
            return pool[x] < pool[y];
        });
        GraverBasis out;
        std::vector<std::vector<int>> index(a.cols());
        for (std::size_t id : order) {
            const SignedVector& g = pool[id];
            bool reducible = false;
            for (const auto& [c, val] : g.entries) {
                for (int hid : index[c]) {
                    const SignedVector& h = out[hid];
                    if (val > 0 ? conformal_leq(h, g) : conformal_leq(h.negated(), g)) {
                        reducible = true;
                        break;
                    }
                }
                if (reducible) break;
            }
            if (!reducible) {
                index[g.entries.front().first].push_back(static_cast<int>(out.size()));
                out.push_back(g);
            }
        }
        return canonicalize(std::move(out));
    }
};

void check_guard(const IntMatrix& a, std::size_t max_cols) {
    if (a.cols() > max_cols)
        throw guard_error("matrix has " + std::to_string(a.cols()) +
                          " columns, exceeding the guard of " + std::to_string(max_cols));
}

}  // namespace

GraverBasis graver_oracle(const IntMatrix& a, std::size_t max_cols,
                          std::size_t completion_budget) {
    check_guard(a, max_cols);
    // Full enumeration runs its pair loop to the end; only the pool size is
    // capped (the loop terminates once the pool stops growing).
    Completion comp(a, /*early_stop=*/false, completion_budget,
                    std::numeric_limits<std::size_t>::max());
    comp.run(integer_kernel_basis(a));
    return comp.minimize();
}

IntMatrix dedup_columns(const IntMatrix& a) {
    std::vector<std::size_t> keep;
    std::set<std::vector<Int>> seen;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        std::vector<Int> col(a.rows());
        for (std::size_t r = 0; r < a.rows(); ++r) col[r] = a.at(r, c);
        if (seen.insert(std::move(col)).second) keep.push_back(c);
    }
    if (keep.size() == a.cols()) return a;
    return a.select_columns(keep);
}

std::optional<SignedVector> nonunimodular_graver_witness(const IntMatrix& a,
                                                         std::size_t max_cols,
                                                         std::size_t completion_budget) {
    check_guard(a, max_cols);
    Completion comp(a, /*early_stop=*/true, completion_budget, completion_budget * 64);
    comp.run(integer_kernel_basis(a));
    if (comp.witness) return comp.witness;
    for (const auto& g : comp.minimize())
        if (g.max_abs() >= 2) return g;
    return std::nullopt;
}

bool is_unimodular_by_graver(const IntMatrix& a, std::size_t max_cols,
                             std::size_t completion_budget) {
    // Duplicate columns change neither the nonzero maximal minors nor the
    // verdict; collapsing them first keeps ghost-heavy inputs cheap.
    return !nonunimodular_graver_witness(dedup_columns(a), max_cols, completion_budget)
                .has_value();
}

// --- nucleus bases ---------------------------------------------------------

namespace {

Int product(const std::vector<Int>& v) {
    Int p = 1;
    for (Int x : v) p = checked_mul(p, x);
    return p;
}

struct CycleEnumerator {
    std::size_t nl, nr;
    const std::function<bool(const SignedVector&)>& visit;
    std::vector<bool> used_l, used_r;
    std::vector<std::size_t> ls, rs;  // the partial cycle l0 r0 l1 r1 ...
    bool stopped = false;

    SignedVector cycle_vector() const {
        SignedVector v;
        const std::size_t k = ls.size();
        for (std::size_t t = 0; t < k; ++t) {
            v.entries.emplace_back(ls[t] * nr + rs[t], 1);
            v.entries.emplace_back(ls[(t + 1) % k] * nr + rs[t], -1);
        }
        std::sort(v.entries.begin(), v.entries.end());
        return v;
    }

    void extend_left() {
        if (stopped) return;
        // Close the cycle (needs >= 2 of each side; reflections are
        // deduplicated by r0 < r_last).
        if (ls.size() >= 2 && rs.front() < rs.back()) {
            if (!visit(cycle_vector())) {
                stopped = true;
                return;
            }
        }
        for (std::size_t l = ls.front() + 1; l < nl && !stopped; ++l) {
            if (used_l[l]) continue;
            used_l[l] = true;
            ls.push_back(l);
            extend_right();
            ls.pop_back();
            used_l[l] = false;
        }
    }

    void extend_right() {
        for (std::size_t r = 0; r < nr && !stopped; ++r) {
            if (used_r[r]) continue;
            used_r[r] = true;
            rs.push_back(r);
            extend_left();
            rs.pop_back();
            used_r[r] = false;
        }
    }

    void run() {
        used_l.assign(nl, false);
        used_r.assign(nr, false);
        for (std::size_t l0 = 0; l0 + 1 < nl && !stopped; ++l0) {
            used_l[l0] = true;
            ls.push_back(l0);
            extend_right();
            ls.pop_back();
            used_l[l0] = false;
        }
    }
};

}  // namespace

void for_each_disjoint_circuit(const std::vector<Int>& left_weights,
                               const std::vector<Int>& right_weights,
                               const std::function<bool(const SignedVector&)>& visit) {
    const Int nl = product(left_weights), nr = product(right_weights);
    CycleEnumerator e{static_cast<std::size_t>(nl), static_cast<std::size_t>(nr), visit,
                      {}, {}, {}, {}, false};
    e.run();
}

GraverBasis graver_disjoint_nucleus(int m, int n, const std::vector<Int>& weights) {
    if (static_cast<int>(weights.size()) != m + n + 2)
        throw std::invalid_argument("graver_disjoint_nucleus: need m+n+2 weights");
    std::vector<Int> lw(weights.begin(), weights.begin() + m + 1);
    std::vector<Int> rw(weights.begin() + m + 1, weights.end());
    GraverBasis out;
    for_each_disjoint_circuit(lw, rw, [&](const SignedVector& v) {
        out.push_back(v);
        return true;
    });
    return canonicalize(std::move(out));
}

void for_each_dual_bond(int m, int n,
                        const std::function<bool(const SignedVector&)>& visit) {
    const std::size_t nl = std::size_t(1) << (m + 1);
    const std::size_t nr = std::size_t(1) << (n + 1);
    const std::size_t total = nl + nr;
    if (total > 26) throw guard_error("dual nucleus too large for bond enumeration");
    const std::uint64_t lmask = (std::uint64_t(1) << nl) - 1;
    const std::uint64_t all = (std::uint64_t(1) << total) - 1;

    auto connected = [&](std::uint64_t s) {
        if (__builtin_popcountll(s) == 1) return true;
        return (s & lmask) != 0 && (s & ~lmask & all) != 0;
    };

    // Vertex l in [0,nl), vertex nl+r for r in [0,nr). Base orientation
    // left to right, reversed when the concatenated binary tuple has an odd
    // number of twos.
    for (std::uint64_t s = 1; s < all; s += 2) {  // vertex 0 always on the A side
        if (!connected(s) || !connected(all & ~s)) continue;
        SignedVector v;
        for (std::size_t l = 0; l < nl; ++l)
            for (std::size_t r = 0; r < nr; ++r) {
                bool a_side_l = (s >> l) & 1;
                bool a_side_r = (s >> (nl + r)) & 1;
                if (a_side_l == a_side_r) continue;
                bool to_right = (__builtin_popcountll(l) + __builtin_popcountll(r)) % 2 == 0;
                bool from_a = a_side_l ? to_right : !to_right;
                v.entries.emplace_back(l * nr + r, from_a ? 1 : -1);
            }
        std::sort(v.entries.begin(), v.entries.end());
        if (!visit(v.canonical())) return;
    }
}

GraverBasis graver_dual_nucleus(int m, int n) {
    GraverBasis out;
    for_each_dual_bond(m, n, [&](const SignedVector& v) {
        out.push_back(v);
        return true;
    });
    return canonicalize(std::move(out));
}

// --- lifting rules ---------------------------------------------------------

namespace {
SignedVector shift(const SignedVector& v, std::size_t offset) {
    SignedVector out = v;
    for (auto& [c, val] : out.entries) c += offset;
    return out;
}
}  // namespace

GraverBasis lift_cone(const GraverBasis& basis, Int q, std::size_t n) {
    GraverBasis out;
    for (Int k = 0; k < q; ++k)
        for (const auto& u : basis) out.push_back(shift(u, k * n));
    return canonicalize(std::move(out));
}

GraverBasis lift_ghost(const GraverBasis& basis, Int q, std::size_t n) {
    GraverBasis out;
    for (std::size_t i = 0; i < n; ++i)
        for (Int j = 0; j < q; ++j)
            for (Int k = j + 1; k < q; ++k) {
                SignedVector v;
                v.entries.emplace_back(j * n + i, 1);
                v.entries.emplace_back(k * n + i, -1);
                out.push_back(std::move(v));
            }
    std::vector<Int> slots;
    for (const auto& u : basis) {
        if (u.max_abs() > 1)
            throw std::invalid_argument("lift_ghost requires a {0,+-1} basis");
        slots.assign(u.support_size(), 0);
        while (true) {
            SignedVector v;
            for (std::size_t t = 0; t < u.entries.size(); ++t)
                v.entries.emplace_back(slots[t] * n + u.entries[t].first,
                                       u.entries[t].second);
            std::sort(v.entries.begin(), v.entries.end());
            out.push_back(v.canonical());
            std::size_t t = slots.size();
            while (t > 0) {
                --t;
                if (slots[t] + 1 < q) {
                    ++slots[t];
                    std::fill(slots.begin() + t + 1, slots.end(), 0);
                    break;
                }
                if (t == 0) goto next_u;
            }
            if (slots.empty()) break;
        }
    next_u:;
    }
    return canonicalize(std::move(out));
}

GraverBasis lift_lambda2(const GraverBasis& basis, std::size_t n) {
    GraverBasis out;
    for (const auto& u : basis) {
        SignedVector v = u;
        for (const auto& [c, val] : u.entries) v.entries.emplace_back(n + c, -val);
        std::sort(v.entries.begin(), v.entries.end());
        out.push_back(std::move(v));
    }
    return canonicalize(std::move(out));
}

GraverBasis lift_lambda3_over_ghost(const GraverBasis& basis3, Int q, const IntMatrix& a) {
    // Input columns (part b, inner i) at b*n+i; output (b, slot k, inner i)
    // at b*q*n + k*n + i.
    const std::size_t n = a.cols();
    const std::size_t qn = static_cast<std::size_t>(q) * n;
    auto out_col = [&](Int b, Int k, std::size_t i) {
        return static_cast<std::size_t>(b) * qn + static_cast<std::size_t>(k) * n + i;
    };

    GraverBasis generation;
    // Type (i): one inner column, two parts, two slots.
    for (std::size_t i = 0; i < n; ++i)
        for (Int j = 0; j < q; ++j)
            for (Int k = j + 1; k < q; ++k)
                for (Int p = 0; p < 3; ++p)
                    for (Int r = p + 1; r < 3; ++r) {
                        SignedVector v;
                        v.entries.emplace_back(out_col(p, j, i), 1);
                        v.entries.emplace_back(out_col(p, k, i), -1);
                        v.entries.emplace_back(out_col(r, j, i), -1);
                        v.entries.emplace_back(out_col(r, k, i), 1);
                        std::sort(v.entries.begin(), v.entries.end());
                        generation.push_back(v.canonical());
                    }
    // Type (ii): spread each input vector across the slots.
    std::vector<Int> slots;
    for (const auto& u : basis3) {
        if (u.max_abs() > 1)
            throw std::invalid_argument("lift_lambda3_over_ghost requires a {0,+-1} basis");
        slots.assign(u.support_size(), 0);
        while (true) {
            SignedVector v;
            for (std::size_t t = 0; t < u.entries.size(); ++t) {
                Int b = static_cast<Int>(u.entries[t].first / n);
                std::size_t i = u.entries[t].first % n;
                v.entries.emplace_back(out_col(b, slots[t], i), u.entries[t].second);
            }
            std::sort(v.entries.begin(), v.entries.end());
            generation.push_back(v.canonical());
            std::size_t t = slots.size();
            bool advanced = false;
            while (t > 0) {
                --t;
                if (slots[t] + 1 < q) {
                    ++slots[t];
                    std::fill(slots.begin() + t + 1, slots.end(), 0);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    generation = canonicalize(std::move(generation));

    // Type (iii) closure: relocate one nonzero within a column class to an
    // empty slot of its part and compensate in another part, at most once
    // per column class along each derivation. Moves on distinct classes
    // commute, so generating them in ascending class order is exhaustive
    // without revisiting permutations of the same move set.
    struct QueueItem {
        SignedVector v;
        std::size_t next_class;  // smallest class still allowed to move
    };
    std::set<std::pair<SignedVector, std::size_t>> seen;
    std::vector<QueueItem> queue;
    std::set<SignedVector> result;
    for (const auto& v : generation) {
        result.insert(v);
        if (seen.emplace(v, 0).second) queue.push_back({v, 0});
    }
    auto value_at = [](const SignedVector& v, std::size_t col) -> Int {
        auto it = std::lower_bound(v.entries.begin(), v.entries.end(),
                                   std::make_pair(col, std::numeric_limits<Int>::min()));
        if (it != v.entries.end() && it->first == col) return it->second;
        return 0;
    };
    while (!queue.empty()) {
        QueueItem item = std::move(queue.back());
        queue.pop_back();
        for (std::size_t i = item.next_class; i < n; ++i) {
            for (Int p = 0; p < 3; ++p)
                for (Int j = 0; j < q; ++j) {
                    Int eps = value_at(item.v, out_col(p, j, i));
                    if (eps == 0) continue;
                    for (Int k = 0; k < q; ++k) {
                        if (k == j || value_at(item.v, out_col(p, k, i)) != 0) continue;
                        for (Int r = 0; r < 3; ++r) {
                            if (r == p) continue;
                            if (value_at(item.v, out_col(r, j, i)) != 0) continue;
                            if (value_at(item.v, out_col(r, k, i)) != 0) continue;
                            SignedVector delta;
                            delta.entries.emplace_back(out_col(p, j, i), -eps);
                            delta.entries.emplace_back(out_col(p, k, i), eps);
                            delta.entries.emplace_back(out_col(r, j, i), eps);
                            delta.entries.emplace_back(out_col(r, k, i), -eps);
                            std::sort(delta.entries.begin(), delta.entries.end());
                            SignedVector moved = add(item.v, delta).canonical();
                            result.insert(moved);
                            if (seen.emplace(moved, i + 1).second)
                                queue.push_back({std::move(moved), i + 1});
                        }
                    }
                }
        }
    }

    // The generated forms are necessary, not sufficient: keep exactly the
    // support-minimal kernel vectors of the lifted matrix.
    IntMatrix lifted = a.ghost_repeat(static_cast<std::size_t>(q)).lambda_lift(3);
    GraverBasis out;
    for (const auto& v : result)
        if (is_unimodular_graver_member(lifted, v)) out.push_back(v);
    return canonicalize(std::move(out));
}

bool is_unimodular_graver_member(const IntMatrix& a, const SignedVector& v) {
    if (v.entries.empty() || v.max_abs() > 1) return false;
    if (!a.in_kernel(v.dense(a.cols()))) return false;
    std::vector<std::size_t> support;
    for (const auto& [c, val] : v.entries) support.push_back(c);
    auto basis = integer_kernel_basis(a.select_columns(support));
    if (basis.size() != 1) return false;
    SignedVector g;
    for (std::size_t i = 0; i < support.size(); ++i)
        if (basis[0][i] != 0) g.entries.emplace_back(support[i], basis[0][i]);
    return g.canonical() == v.canonical();
}

}  // namespace hmg
