#include "qkwc/inflated.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qkwc {

namespace {

Rational rpow(const Rational &x, int e)
{
    Rational result = 1;
    Rational base = e < 0 ? Rational(1 / x) : x;
    for (int i = 0; i < std::abs(e); ++i) {
        result *= base;
    }
    return result;
}

// Calls f on every composition of n into r parts, each >= lo.
void for_each_composition(int n, int r, int lo, const std::function<void(const std::vector<int> &)> &f)
{
    std::vector<int> parts(static_cast<std::size_t>(r), lo);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == r - 1) {
            if (left >= lo) {
                parts[static_cast<std::size_t>(i)] = left;
                f(parts);
            }
            return;
        }
        for (int p = lo; p <= left - lo * (r - 1 - i); ++p) {
            parts[static_cast<std::size_t>(i)] = p;
            rec(i + 1, left - p);
        }
    };
    if (r == 0) {
        if (n == 0) {
            f(parts);
        }
        return;
    }
    rec(0, n);
}

} // namespace

Rational staircase_sum(int s, const std::vector<Rational> &x)
{
    const std::size_t r = x.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i] == 0) {
            throw invalid_input("staircase point has a zero coordinate");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (x[i] == x[j]) {
                throw invalid_input("staircase points must be pairwise distinct");
            }
        }
    }
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        Rational term = rpow(x[perm[0]], s);
        for (std::size_t i = 0; i + 1 < r; ++i) {
            term /= 1 - x[perm[i + 1]] / x[perm[i]];
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Rational staircase_closed_form(int s, const std::vector<Rational> &x)
{
    const int r = static_cast<int>(x.size());
    Rational total = 0;
    if (s >= 0) {
        for_each_composition(s, r, 0, [&](const std::vector<int> &j) {
            Rational term = 1;
            for (int i = 0; i < r; ++i) {
                term *= rpow(x[static_cast<std::size_t>(i)], j[static_cast<std::size_t>(i)]);
            }
            total += term;
        });
        return total;
    }
    for_each_composition(-s, r, 1, [&](const std::vector<int> &j) {
        Rational term = 1;
        for (int i = 0; i < r; ++i) {
            term *= rpow(x[static_cast<std::size_t>(i)], -j[static_cast<std::size_t>(i)]);
        }
        total += term;
    });
    return r % 2 == 1 ? total : Rational(-total);
}

bool staircase_symbolic(int s, int r)
{
    if (r < 1) {
        throw invalid_input("staircase needs r >= 1");
    }
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    auto ring = make_ring({}, names);
    std::vector<RingElem> x;
    for (const auto &n : names) {
        x.push_back(RingElem::generator(ring, n));
    }
    auto diff = [&](std::size_t a, std::size_t b) { return x[a] - x[b]; };
    // V = prod_{a<b} (x_a - x_b).
    RingElem V(ring, 1);
    for (std::size_t a = 0; a < x.size(); ++a) {
        for (std::size_t b = a + 1; b < x.size(); ++b) {
            V *= diff(a, b);
        }
    }
    // Each term is x_{p1}^s prod_{i<r} x_{p_i} / prod_{i<r} (x_{p_i} - x_{p_{i+1}}).
    std::vector<std::size_t> perm(x.size());
    std::iota(perm.begin(), perm.end(), 0);
    RingElem lhs(ring);
    do {
        RingElem term = pow(x[perm[0]], s);
        std::vector<std::vector<bool>> used(x.size(), std::vector<bool>(x.size(), false));
        Rational sign = 1;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            term *= x[perm[i]];
            const std::size_t a = std::min(perm[i], perm[i + 1]);
            const std::size_t b = std::max(perm[i], perm[i + 1]);
            used[a][b] = true;
            if (perm[i] > perm[i + 1]) {
                sign = -sign;
            }
        }
        for (std::size_t a = 0; a < x.size(); ++a) {
            for (std::size_t b = a + 1; b < x.size(); ++b) {
                if (!used[a][b]) {
                    term *= diff(a, b);
                }
            }
        }
        lhs += term * sign;
    } while (std::next_permutation(perm.begin(), perm.end()));

    RingElem closed(ring);
    if (s >= 0) {
        closed = sym_power(s, std::accumulate(x.begin(), x.end(), RingElem(ring)));
    } else {
        for_each_composition(-s, r, 1, [&](const std::vector<int> &j) {
            RingElem term(ring, 1);
            for (int i = 0; i < r; ++i) {
                term *= pow(x[static_cast<std::size_t>(i)], -j[static_cast<std::size_t>(i)]);
            }
            closed += term;
        });
        if (r % 2 == 0) {
            closed = -closed;
        }
    }
    return lhs == closed * V;
}

// ---------------------------------------------------------------------------

KoszulRing::KoszulRing(int k) : k_(k)
{
    if (k < 1) {
        throw invalid_input("Koszul ring needs k >= 1");
    }
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) {
        names.push_back("Theta" + std::to_string(i));
    }
    ring_ = make_ring({}, names);
    // e_i from prod (1 + Theta_i z).
    std::vector<RingElem> e(static_cast<std::size_t>(k + 1), RingElem(ring_));
    e[0] = RingElem(ring_, 1);
    for (int i = 1; i <= k; ++i) {
        const RingElem th = theta(i);
        for (int j = i; j >= 1; --j) {
            e[static_cast<std::size_t>(j)] += th * e[static_cast<std::size_t>(j - 1)];
        }
    }
    e_ = std::move(e);
    RingElem sum(ring_);
    for (int i = 1; i <= k; ++i) {
        sum += theta(i);
    }
    h_ = sym_powers(k, sum);
    // L^{-1} = -(-1)^k e_k^{-1} sum_{i<k} (-1)^i e_i L^{k-1-i}.
    const RingElem ek_inv = invert(e_[static_cast<std::size_t>(k)]);
    L_inverse_ = zero();
    for (int i = 0; i < k; ++i) {
        const Rational sign = ((k + i) % 2 == 0) ? -1 : 1;
        L_inverse_[static_cast<std::size_t>(k - 1 - i)] = ek_inv * e_[static_cast<std::size_t>(i)] * sign;
    }
}

RingElem KoszulRing::theta(int i) const
{
    return RingElem::generator(ring_, "Theta" + std::to_string(i));
}

KoszulRing::Elem KoszulRing::zero() const
{
    return Elem(static_cast<std::size_t>(k_), RingElem(ring_));
}

KoszulRing::Elem KoszulRing::constant(const RingElem &c) const
{
    Elem out = zero();
    out[0] = c;
    return out;
}

KoszulRing::Elem KoszulRing::add(const Elem &a, const Elem &b) const
{
    Elem out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

KoszulRing::Elem KoszulRing::multiply(const Elem &a, const Elem &b) const
{
    std::map<int, RingElem> poly;
    for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < k_; ++j) {
            RingElem p = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            if (p.is_zero()) {
                continue;
            }
            auto [it, inserted] = poly.try_emplace(i + j, p);
            if (!inserted) {
                it->second += p;
            }
        }
    }
    return reduce(poly);
}

KoszulRing::Elem KoszulRing::reduce(const std::map<int, RingElem> &input) const
{
    std::map<int, RingElem> poly = input;
    // Top degrees: L^n = sum_{i=1}^k (-1)^{i+1} e_i L^{n-i}.
    while (!poly.empty() && poly.rbegin()->first >= k_) {
        const int n = poly.rbegin()->first;
        const RingElem c = poly.rbegin()->second;
        poly.erase(n);
        for (int i = 1; i <= k_; ++i) {
            RingElem add = c * e_[static_cast<std::size_t>(i)];
            if (i % 2 == 0) {
                add = -add;
            }
            auto [it, inserted] = poly.try_emplace(n - i, add);
            if (!inserted) {
                it->second += add;
            }
        }
    }
    Elem out = zero();
    Elem inv_power = constant(RingElem(ring_, 1));
    int cur = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        const int n = it->first;
        if (n >= 0) {
            out[static_cast<std::size_t>(n)] += it->second;
            continue;
        }
        while (cur > n) {
            inv_power = multiply(inv_power, L_inverse_);
            --cur;
        }
        for (int j = 0; j < k_; ++j) {
            out[static_cast<std::size_t>(j)] += it->second * inv_power[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

KoszulRing::Elem KoszulRing::L_power(int t) const
{
    return reduce({{t, RingElem(ring_, 1)}});
}

bool KoszulRing::equal(const Elem &a, const Elem &b) const
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) {
            return false;
        }
    }
    return true;
}

RingElem KoszulRing::pushforward(const Elem &a) const
{
    RingElem out(ring_);
    for (int j = 0; j < k_; ++j) {
        out += a[static_cast<std::size_t>(j)] * h_[static_cast<std::size_t>(j)];
    }
    return out;
}

KoszulRing::Elem KoszulRing::alpha(int i) const
{
    RingElem neg_sum(ring_);
    for (int a = 1; a <= k_; ++a) {
        neg_sum -= theta(a);
    }
    const auto hn = sym_powers(i, neg_sum);
    std::map<int, RingElem> poly;
    for (int j = 0; j <= i; ++j) {
        if (!hn[static_cast<std::size_t>(i - j)].is_zero()) {
            poly.emplace(j, hn[static_cast<std::size_t>(i - j)]);
        }
    }
    return reduce(poly);
}

RingElem pushforward(const KoszulRing &R, int t)
{
    return R.pushforward(R.L_power(t));
}

RingElem pushforward_closed_form(const KoszulRing &R, int t)
{
    const int k = R.k();
    RingElem out(R.theta_ring());
    if (t >= 0) {
        for_each_composition(t, k, 0, [&](const std::vector<int> &j) {
            RingElem term(R.theta_ring(), 1);
            for (int i = 0; i < k; ++i) {
                term *= pow(R.theta(i + 1), j[static_cast<std::size_t>(i)]);
            }
            out += term;
        });
        return out;
    }
    for_each_composition(-t, k, 1, [&](const std::vector<int> &j) {
        RingElem term(R.theta_ring(), 1);
        for (int i = 0; i < k; ++i) {
            term *= -pow(R.theta(i + 1), -j[static_cast<std::size_t>(i)]);
        }
        out -= term;
    });
    return out;
}

bool generating_identity(const KoszulRing &R)
{
    const int k = R.k();
    // Coefficient of lambda^{-i}: alpha_i - L alpha_{i-1} (i <= k) vs (-1)^i e_i.
    const auto L = R.L_power(1);
    for (int i = 0; i <= k; ++i) {
        KoszulRing::Elem lhs = R.zero();
        if (i < k) {
            lhs = R.alpha(i);
        }
        if (i >= 1) {
            auto shifted = R.multiply(L, R.alpha(i - 1));
            for (auto &c : shifted) {
                c = -c;
            }
            lhs = R.add(lhs, shifted);
        }
        RingElem rhs = R.elementary(i);
        if (i % 2 == 1) {
            rhs = -rhs;
        }
        if (!R.equal(lhs, R.constant(rhs))) {
            return false;
        }
    }
    return true;
}

} // namespace qkwc
