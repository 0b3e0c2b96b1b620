#include "nlg/behavior.hpp"

#include <stdexcept>

namespace nlg {

namespace {

Bits full_mask(int n) { return (Bits{1} << n) - 1; }

}  // namespace

bool is_normalized(const Behavior& b) {
    Bits lim = Bits{1} << b.n;
    for (Bits in = 0; in < lim; ++in) {
        Rat sum = 0;
        for (Bits out = 0; out < lim; ++out) sum += b.at(out, in);
        if (sum != 1) return false;
    }
    return true;
}

bool is_nonnegative(const Behavior& b) {
    for (const Rat& r : b.p)
        if (r < 0) return false;
    return true;
}

bool is_no_signaling(const Behavior& b) {
    int n = b.n;
    for (int i = 1; i <= n; ++i) {
        Bits ibit = Bits{1} << (i - 1);
        Bits rest = full_mask(n) & ~ibit;
        // Enumerate assignments of the other parties' outputs and inputs.
        for (Bits out = 0; out < (Bits{1} << n); ++out) {
            if (out & ibit) continue;
            for (Bits in = 0; in < (Bits{1} << n); ++in) {
                if (in & ibit) continue;
                Rat m0 = b.at(out, in) + b.at(out | ibit, in);
                Rat m1 = b.at(out, in | ibit) + b.at(out | ibit, in | ibit);
                if (m0 != m1) return false;
            }
        }
        (void)rest;
    }
    return true;
}

bool is_no_signaling_all_subsets(const Behavior& b) {
    int n = b.n;
    Bits all = full_mask(n);
    for (Bits keep = 1; keep < all; ++keep) {  // proper nonempty subsets
        Bits drop = all & ~keep;
        // Marginal on `keep` must not depend on the inputs of `drop`.
        for (Bits out_k = 0; out_k <= all; ++out_k) {
            if (out_k & drop) continue;
            for (Bits in_k = 0; in_k <= all; ++in_k) {
                if (in_k & drop) continue;
                bool have_ref = false;
                Rat ref;
                for (Bits in_d = 0; in_d <= all; ++in_d) {
                    if (in_d & keep) continue;
                    Rat sum = 0;
                    for (Bits out_d = 0; out_d <= all; ++out_d) {
                        if (out_d & keep) continue;
                        sum += b.at(out_k | out_d, in_k | in_d);
                    }
                    if (!have_ref) {
                        ref = sum;
                        have_ref = true;
                    } else if (sum != ref) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

Rat value(const BellFunctional& f, const Behavior& b) {
    if (f.n != b.n) throw std::invalid_argument("value: party counts differ");
    Rat acc = f.offset;
    for (std::size_t i = 0; i < f.coeff.size(); ++i)
        if (f.coeff[i] != 0) acc += f.coeff[i] * b.p[i];
    return acc;
}

Behavior svetlichny_box(const SvetlichnyGame& game) {
    Behavior b(game.n);
    Rat w = game.n == 1 ? Rat(1) : Rat(1, 1 << (game.n - 1));
    Bits lim = Bits{1} << game.n;
    for (Bits in = 0; in < lim; ++in)
        for (Bits out = 0; out < lim; ++out)
            if (predicate(game, out, in)) b.at(out, in) = w;
    return b;
}

Behavior deterministic_box(const DeterministicStrategy& s) {
    int n = s.n();
    Behavior b(n);
    Bits lim = Bits{1} << n;
    for (Bits in = 0; in < lim; ++in) {
        Bits out = 0;
        for (int i = 0; i < n; ++i)
            if (s.response[i][bit_of(in, i + 1)]) out |= Bits{1} << i;
        b.at(out, in) = 1;
    }
    return b;
}

DeterministicStrategy strategy_from_index(int n, std::size_t index) {
    DeterministicStrategy s;
    s.response.resize(n);
    for (int i = 0; i < n; ++i) {
        int code = static_cast<int>(index >> (2 * i)) & 3;
        s.response[i] = {code & 1, (code >> 1) & 1};
    }
    return s;
}

Behavior mix(const std::vector<Behavior>& boxes, const std::vector<Rat>& weights) {
    if (boxes.empty() || boxes.size() != weights.size())
        throw std::invalid_argument("mix: boxes/weights length mismatch");
    Rat sum = 0;
    for (const Rat& w : weights) {
        if (w < 0) throw std::domain_error("mix: negative weight");
        sum += w;
    }
    if (sum != 1) throw std::domain_error("mix: weights must sum to 1");
    Behavior out(boxes[0].n);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (boxes[i].n != out.n) throw std::invalid_argument("mix: party counts differ");
        for (std::size_t j = 0; j < out.p.size(); ++j) out.p[j] += weights[i] * boxes[i].p[j];
    }
    return out;
}

Behavior uniform_box(int n) {
    Behavior b(n);
    Rat w(1, 1 << n);
    for (Rat& r : b.p) r = w;
    return b;
}

Behavior product(const Behavior& a, const Behavior& b) {
    Behavior out(a.n + b.n);
    Bits la = Bits{1} << a.n, lb = Bits{1} << b.n;
    for (Bits ia = 0; ia < la; ++ia)
        for (Bits ib = 0; ib < lb; ++ib)
            for (Bits oa = 0; oa < la; ++oa)
                for (Bits ob = 0; ob < lb; ++ob)
                    out.at(oa | (ob << a.n), ia | (ib << a.n)) = a.at(oa, ia) * b.at(ob, ib);
    return out;
}

Behavior marginal(const Behavior& b, const std::vector<int>& parties) {
    if (parties.empty()) throw std::invalid_argument("marginal: empty subset");
    if (!is_no_signaling(b)) throw std::domain_error("marginal: behavior is signaling");
    int m = static_cast<int>(parties.size());
    Bits keep = 0;
    for (int p : parties) {
        if (p < 1 || p > b.n) throw std::invalid_argument("marginal: party out of range");
        keep |= Bits{1} << (p - 1);
    }
    Bits all = full_mask(b.n);
    Bits drop = all & ~keep;
    Behavior out(m);
    for (Bits out_s = 0; out_s < (Bits{1} << m); ++out_s)
        for (Bits in_s = 0; in_s < (Bits{1} << m); ++in_s) {
            // Scatter the small indices onto the kept parties; complement
            // inputs fixed at 0 (immaterial by no-signaling).
            Bits out_full = 0, in_full = 0;
            for (int j = 0; j < m; ++j) {
                Bits pb = Bits{1} << (parties[j] - 1);
                if (out_s & (Bits{1} << j)) out_full |= pb;
                if (in_s & (Bits{1} << j)) in_full |= pb;
            }
            Rat sum = 0;
            for (Bits out_d = 0; out_d <= all; ++out_d) {
                if (out_d & keep) continue;
                sum += b.at(out_full | out_d, in_full);
            }
            out.at(out_s, in_s) = sum;
            (void)drop;
        }
    return out;
}

Conditioned condition(const Behavior& b, int k, Bits tail_outputs, Bits tail_inputs) {
    int n = b.n;
    if (k < 1 || k >= n) throw std::domain_error("condition: k out of range");
    Bits tmask = (Bits{1} << (n - k)) - 1;
    if ((tail_outputs & ~tmask) != 0 || (tail_inputs & ~tmask) != 0)
        throw std::invalid_argument("condition: tail length mismatch");
    Bits hmask = (Bits{1} << k) - 1;
    Rat prob = 0;
    for (Bits oh = 0; oh <= hmask; ++oh)
        prob += b.at(oh | (tail_outputs << k), (tail_inputs << k));
    if (prob == 0) return Conditioned{prob, std::nullopt};
    Behavior cond(k);
    for (Bits ih = 0; ih <= hmask; ++ih)
        for (Bits oh = 0; oh <= hmask; ++oh)
            cond.at(oh, ih) = b.at(oh | (tail_outputs << k), ih | (tail_inputs << k)) / prob;
    return Conditioned{prob, std::move(cond)};
}

Conditioned condition_aux(const Behavior& b, const SvetlichnyGame& game, int k, int a, int bbit) {
    int n = b.n;
    if (k < 1 || k >= n) throw std::domain_error("condition_aux: k out of range");
    Bits tmask = (Bits{1} << (n - k)) - 1;
    Bits hmask = (Bits{1} << k) - 1;
    int inputs_of_parity = (n - k == 1) ? 1 : 1 << (n - k - 1);
    Rat prob = 0;
    Behavior acc(k);
    for (Bits ti = 0; ti <= tmask; ++ti) {
        if (parity(ti) != bbit) continue;
        for (Bits to = 0; to <= tmask; ++to) {
            if (auxiliary_values(game, k, to, ti).a != a) continue;
            for (Bits oh = 0; oh <= hmask; ++oh)
                prob += b.at(oh | (to << k), (ti << k));
            for (Bits ih = 0; ih <= hmask; ++ih)
                for (Bits oh = 0; oh <= hmask; ++oh)
                    acc.at(oh, ih) += b.at(oh | (to << k), ih | (ti << k));
        }
    }
    prob /= inputs_of_parity;
    if (prob == 0) return Conditioned{prob, std::nullopt};
    for (Rat& r : acc.p) r /= prob * inputs_of_parity;
    return Conditioned{prob, std::move(acc)};
}

LhvOptimum lhv_max(const BellFunctional& f) {
    if (f.n > 5) throw std::length_error("lhv_max: enumeration capped at n <= 5");
    std::size_t count = std::size_t{1} << (2 * f.n);
    Bits lim = Bits{1} << f.n;
    bool have_best = false;
    Rat best;
    std::size_t best_index = 0;
    for (std::size_t idx = 0; idx < count; ++idx) {
        Rat v = f.offset;
        for (Bits in = 0; in < lim; ++in) {
            Bits out = 0;
            for (int i = 0; i < f.n; ++i) {
                int code = static_cast<int>(idx >> (2 * i)) & 3;
                if ((code >> bit_of(in, i + 1)) & 1) out |= Bits{1} << i;
            }
            const Rat& cf = f.at(out, in);
            if (cf != 0) v += cf;
        }
        if (!have_best || v > best) {
            best = v;
            best_index = idx;
            have_best = true;
        }
    }
    return LhvOptimum{best, strategy_from_index(f.n, best_index)};
}

Behavior random_ns_behavior(int n, std::mt19937& rng, int components) {
    std::vector<Behavior> boxes;
    std::vector<Rat> weights;
    std::uniform_int_distribution<std::size_t> strat(0, (std::size_t{1} << (2 * n)) - 1);
    std::uniform_int_distribution<Bits> cbits(0, (Bits{1} << (n + 1)) - 1);
    std::uniform_int_distribution<int> wdist(1, 64);
    long total = 0;
    for (int i = 0; i < components; ++i) {
        if (i % 3 == 2) {
            std::vector<int> c(n + 1);
            Bits w = cbits(rng);
            for (int j = 0; j <= n; ++j) c[j] = static_cast<int>((w >> j) & 1u);
            boxes.push_back(svetlichny_box(SvetlichnyGame(n, c)));
        } else {
            boxes.push_back(deterministic_box(strategy_from_index(n, strat(rng))));
        }
        int w = wdist(rng);
        weights.push_back(Rat(w));
        total += w;
    }
    for (Rat& w : weights) w /= total;
    return mix(boxes, weights);
}

}  // namespace nlg
