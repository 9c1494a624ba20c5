#include "qkwc/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qkwc::kernels {

namespace {

inline bool product_monomial(const RingSpec &spec, const Monomial &x, const Monomial &y, Monomial &out)
{
    const std::size_t n = spec.num_vars();
    int weight = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto e = x.exps[i] + y.exps[i];
        out.exps[i] = e;
        switch (spec.kind(i)) {
        case VarKind::nilpotent:
        case VarKind::tvar:
            if (e >= spec.order(i)) {
                return false;
            }
            break;
        case VarKind::newton:
            weight += spec.order(i) * e;
            break;
        case VarKind::unit:
            break;
        }
    }
    return weight <= spec.weight_cutoff();
}

void multiply_rows(const RingSpec &spec, std::span<const Term> a, std::span<const Term> b, std::size_t row_begin,
                   std::size_t row_end, std::vector<Term> &out)
{
    out.reserve(out.size() + (row_end - row_begin) * b.size());
    Monomial m;
    for (std::size_t i = row_begin; i < row_end; ++i) {
        for (const auto &tb : b) {
            if (product_monomial(spec, a[i].mono, tb.mono, m)) {
                out.push_back(Term{m, a[i].coeff * tb.coeff});
            }
        }
    }
}

} // namespace

void normalize(const RingSpec &spec, std::vector<Term> &terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &x, const Term &y) { return x.mono < y.mono; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms.size();) {
        std::size_t s = r + 1;
        Rational acc = std::move(terms[r].coeff);
        while (s < terms.size() && terms[s].mono == terms[r].mono) {
            acc += terms[s].coeff;
            ++s;
        }
        if (acc != 0 && !spec.truncated(terms[r].mono)) {
            terms[w].mono = terms[r].mono;
            terms[w].coeff = std::move(acc);
            ++w;
        }
        r = s;
    }
    terms.resize(w);
}

std::vector<Term> multiply_serial(const RingSpec &spec, std::span<const Term> a, std::span<const Term> b)
{
    std::vector<Term> out;
    multiply_rows(spec, a, b, 0, a.size(), out);
    normalize(spec, out);
    return out;
}

std::vector<Term> multiply_parallel(const RingSpec &spec, std::span<const Term> a, std::span<const Term> b)
{
    const int threads = std::max(1, std::min<int>(max_threads(), static_cast<int>(a.size())));
    if (threads == 1) {
        return multiply_serial(spec, a, b);
    }
    std::vector<std::vector<Term>> blocks(static_cast<std::size_t>(threads));
    const std::size_t rows = a.size();
#pragma omp parallel for num_threads(threads) schedule(static)
    for (int t = 0; t < threads; ++t) {
        const std::size_t lo = rows * static_cast<std::size_t>(t) / static_cast<std::size_t>(threads);
        const std::size_t hi = rows * static_cast<std::size_t>(t + 1) / static_cast<std::size_t>(threads);
        auto &block = blocks[static_cast<std::size_t>(t)];
        multiply_rows(spec, a, b, lo, hi, block);
        normalize(spec, block);
    }
    std::vector<Term> out;
    std::size_t total = 0;
    for (const auto &block : blocks) {
        total += block.size();
    }
    out.reserve(total);
    for (auto &block : blocks) {
        std::move(block.begin(), block.end(), std::back_inserter(out));
    }
    normalize(spec, out);
    return out;
}

int max_threads()
{
    int cap = 1;
#ifdef _OPENMP
    cap = omp_get_max_threads();
#endif
    if (const char *env = std::getenv("QKWC_THREADS")) {
        try {
            const int requested = std::stoi(env);
            if (requested >= 1) {
                cap = std::min(cap, requested);
            }
        } catch (const std::exception &) {
            // ignore malformed values
        }
    }
    return std::max(1, cap);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body)
{
    const int threads = max_threads();
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (std::size_t i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace qkwc::kernels
