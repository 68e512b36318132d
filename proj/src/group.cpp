// Copyright 2026 The mmd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmd/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mmd {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("group presentation: orders list is empty");
    long total = 1;
    for (int d : orders_) {
        if (d < 1) throw std::invalid_argument("group presentation: cyclic order must be >= 1");
        total *= d;
        if (total > (1L << 30)) throw std::invalid_argument("group presentation: order too large");
    }
    size_ = static_cast<int>(total);
}

int FiniteAbelianGroup::exponent() const {
    long e = 1;
    for (int d : orders_) e = std::lcm(e, static_cast<long>(d));
    return static_cast<int>(e);
}

int FiniteAbelianGroup::op(int a, int b) const {
    // mixed-radix add, rightmost digit fastest
    int result = 0;
    int place = 1;
    for (int i = rank() - 1; i >= 0; --i) {
        int d = orders_[static_cast<size_t>(i)];
        int da = (a / place) % d;
        int db = (b / place) % d;
        result += ((da + db) % d) * place;
        place *= d;
    }
    return result;
}

int FiniteAbelianGroup::inverse(int a) const {
    int result = 0;
    int place = 1;
    for (int i = rank() - 1; i >= 0; --i) {
        int d = orders_[static_cast<size_t>(i)];
        int da = (a / place) % d;
        result += ((d - da) % d) * place;
        place *= d;
    }
    return result;
}

int FiniteAbelianGroup::power(int a, int n) const {
    int result = 0;
    int place = 1;
    for (int i = rank() - 1; i >= 0; --i) {
        int d = orders_[static_cast<size_t>(i)];
        long da = (a / place) % d;
        long m = (da * (n % d)) % d;
        if (m < 0) m += d;
        result += static_cast<int>(m) * place;
        place *= d;
    }
    return result;
}

int FiniteAbelianGroup::element_order(int a) const {
    int ord = 1;
    for (int i = 0; i < rank(); ++i) {
        int d = orders_[static_cast<size_t>(i)];
        int digit = tuple_of(a)[static_cast<size_t>(i)];
        int o = d / std::gcd(d, digit == 0 ? d : digit);
        ord = std::lcm(ord, o);
    }
    return ord;
}

std::vector<int> FiniteAbelianGroup::tuple_of(int index) const {
    if (index < 0 || index >= size_) throw std::invalid_argument("element index out of range");
    std::vector<int> t(static_cast<size_t>(rank()));
    for (int i = rank() - 1; i >= 0; --i) {
        int d = orders_[static_cast<size_t>(i)];
        t[static_cast<size_t>(i)] = index % d;
        index /= d;
    }
    return t;
}

int FiniteAbelianGroup::index_of(const std::vector<int>& tuple) const {
    if (tuple.size() != orders_.size()) throw std::invalid_argument("element tuple has wrong rank");
    int idx = 0;
    for (size_t i = 0; i < tuple.size(); ++i) {
        int d = orders_[i];
        if (tuple[i] < 0 || tuple[i] >= d) throw std::invalid_argument("element tuple entry out of range");
        idx = idx * d + tuple[i];
    }
    return idx;
}

int FiniteAbelianGroup::generator(int factor) const {
    if (factor < 0 || factor >= rank()) throw std::invalid_argument("generator: factor out of range");
    std::vector<int> t(static_cast<size_t>(rank()), 0);
    if (orders_[static_cast<size_t>(factor)] > 1) t[static_cast<size_t>(factor)] = 1;
    return index_of(t);
}

DualGroup::DualGroup(const FiniteAbelianGroup& base) : g_(base) {
    lcm_ = 1;
    for (int d : g_.orders()) lcm_ = std::lcm(lcm_, static_cast<long>(d));
}

cplx DualGroup::pair(int gamma, int u) const {
    long e = pair_exponent(gamma, u);
    double theta = 2.0 * kPi * static_cast<double>(e) / static_cast<double>(lcm_);
    return {std::cos(theta), std::sin(theta)};
}

long DualGroup::pair_exponent(int gamma, int u) const {
    auto gt = g_.tuple_of(gamma);
    auto ut = g_.tuple_of(u);
    long e = 0;
    for (size_t j = 0; j < gt.size(); ++j) {
        long d = g_.orders()[j];
        e = (e + static_cast<long>(gt[j]) * ut[j] % d * (lcm_ / d)) % lcm_;
    }
    return e;
}

cplx character_value(const DualGroup& dual, int gamma, const FiniteAbelianGroup& primal, int u) {
    if (!dual.structure().same_presentation(primal))
        throw std::domain_error("character_value: dual and primal presentations differ");
    return dual.pair(gamma, u);
}

Mat fourier_matrix(const FiniteAbelianGroup& g) {
    const int n = g.size();
    DualGroup dual(g);
    Mat f(n, n);
    double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int gamma = 0; gamma < n; ++gamma)
        for (int u = 0; u < n; ++u) f(gamma, u) = std::conj(dual.pair(gamma, u)) * scale;
    return f;
}

Vec fourier(const FiniteAbelianGroup& g, const Vec& f) {
    if (f.size() != g.size()) throw std::invalid_argument("fourier: dimension mismatch");
    return fourier_matrix(g) * f;
}

Vec fourier_inverse(const FiniteAbelianGroup& g, const Vec& fhat) {
    if (fhat.size() != g.size()) throw std::invalid_argument("fourier_inverse: dimension mismatch");
    return fourier_matrix(g).adjoint() * fhat;
}

cplx haar_mean(const FiniteAbelianGroup& g, const Vec& f) {
    if (f.size() != g.size()) throw std::invalid_argument("haar_mean: dimension mismatch");
    return f.sum() / static_cast<double>(g.size());
}

Vec translate(const FiniteAbelianGroup& g, const Vec& f, int u) {
    if (f.size() != g.size()) throw std::invalid_argument("translate: dimension mismatch");
    Vec out(f.size());
    for (int v = 0; v < g.size(); ++v) out(v) = f(g.op(v, u));
    return out;
}

namespace {

void partitions_of(int k, int max_part, std::vector<std::vector<int>>& out, std::vector<int>& cur) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(k, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(k - p, p, out, cur);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> all_abelian_groups_up_to(int max_order) {
    std::vector<std::vector<int>> result;
    for (int n = 1; n <= max_order; ++n) {
        // factor n, then one cyclic-order list per choice of partition of
        // each prime exponent
        std::vector<std::pair<int, int>> factors;  // (prime, exponent)
        int m = n;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                int e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                factors.emplace_back(p, e);
            }
        }
        if (m > 1) factors.emplace_back(m, 1);

        std::vector<std::vector<std::vector<int>>> per_prime;  // cyclic orders per partition
        for (auto [p, e] : factors) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            partitions_of(e, e, parts, cur);
            std::vector<std::vector<int>> orders;
            for (const auto& part : parts) {
                std::vector<int> o;
                for (int exp : part) {
                    int q = 1;
                    for (int i = 0; i < exp; ++i) q *= p;
                    o.push_back(q);
                }
                orders.push_back(o);
            }
            per_prime.push_back(orders);
        }

        std::vector<std::vector<int>> combos{{}};
        for (const auto& choices : per_prime) {
            std::vector<std::vector<int>> next;
            for (const auto& base : combos)
                for (const auto& c : choices) {
                    auto merged = base;
                    merged.insert(merged.end(), c.begin(), c.end());
                    next.push_back(merged);
                }
            combos = next;
        }
        for (auto& c : combos) {
            if (c.empty()) c.push_back(1);  // the trivial group
            std::sort(c.rbegin(), c.rend());
            result.push_back(c);
        }
    }
    return result;
}

}  // namespace mmd
