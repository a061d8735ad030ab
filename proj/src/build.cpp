#include "stab3/build.hpp"

#include <stdexcept>

#include "stab3/bounds.hpp"
#include "stab3/catalog.hpp"
#include "stab3/families.hpp"
#include "stab3/verify.hpp"

namespace stab3 {

std::string ChainFactor::name() const {
    switch (kind) {
        case gottesman: return "[2^" + std::to_string(param) + "]";
        case eight_block: return "[8*" + std::to_string(param) + "]";
        case small: return "[" + std::to_string(param) + "]";
    }
    return "?";
}

std::string Theorem2Plan::chain_text() const {
    std::string out;
    for (const ChainFactor& f : chain) out += (out.empty() ? "" : ">") + f.name();
    return out;
}

Theorem2Plan theorem2_plan(std::int64_t n) {
    if (n < 38) throw std::invalid_argument("theorem2_plan covers n >= 38");
    Theorem2Plan p;
    for (int m = 2;; ++m) {
        if (8 * f_seq(m) - 2 <= n && n <= f_seq(m + 2) - 4) {
            const std::int64_t d = f_seq(m + 2) - 4 - n;
            p.case_id = 'a';
            p.m = m;
            p.alpha = d / 8;
            p.beta = static_cast<int>(d % 8);
            break;
        }
        if (f_seq(m + 2) - 3 <= n && n <= 8 * f_seq(m + 1) - 3) {
            const std::int64_t d = 8 * f_seq(m + 1) - 3 - n;
            p.case_id = 'b';
            p.m = m;
            p.alpha = d / 8;
            p.beta = static_cast<int>(d % 8);
            break;
        }
    }
    if (p.case_id == 'a') {
        if (p.alpha == 0)
            p.chain.push_back({ChainFactor::gottesman, 2 * p.m + 2});
        else
            p.chain.push_back({ChainFactor::eight_block,
                               static_cast<int>((std::int64_t{1} << (2 * p.m - 1)) - p.alpha)});
        for (int k = p.m; k > 2; --k) p.chain.push_back({ChainFactor::gottesman, 2 * k});
        p.chain.push_back({ChainFactor::small, 17 - p.beta});
    } else {
        if (p.alpha == 0)
            p.chain.push_back({ChainFactor::gottesman, 2 * p.m + 3});
        else
            p.chain.push_back({ChainFactor::eight_block,
                               static_cast<int>((std::int64_t{1} << (2 * p.m)) - p.alpha)});
        for (int k = p.m; k > 2; --k) p.chain.push_back({ChainFactor::gottesman, 2 * k + 1});
        p.chain.push_back({ChainFactor::small, 37 - p.beta});
    }
    return p;
}

namespace {

StabilizerCode resolve(const ChainFactor& f) {
    switch (f.kind) {
        case ChainFactor::gottesman: return gottesman_code(f.param);
        case ChainFactor::eight_block: return eight_block_code(f.param);
        case ChainFactor::small: return small_code(f.param);
    }
    throw std::logic_error("bad chain factor");
}

StabilizerCode fold_chain(const Theorem2Plan& plan) {
    GeneratorBlock cur = resolve(plan.chain.back()).block;
    for (auto it = plan.chain.rbegin() + 1; it != plan.chain.rend(); ++it)
        cur = paste(resolve(*it).block, cur);
    return make_code(std::move(cur), true, plan.chain_text());
}

StabilizerCode checked(StabilizerCode code, int want_s) {
    if (code.n <= kVerifyCap) {
        const VerificationReport r = verify_code(code);
        if (!r.green()) throw std::logic_error("built code failed verification: " + r.render());
    }
    if (code.s != want_s)
        throw std::logic_error("built code has s = " + std::to_string(code.s) +
                               ", expected " + std::to_string(want_s));
    return code;
}

} // namespace

StabilizerCode build(std::int64_t n) {
    if (n < 5) throw std::invalid_argument("no distance-3 code below n = 5");
    const int want_s = classify_length(n).s_best;
    if (n <= 37) return checked(small_code(static_cast<int>(n)), want_s);
    for (int m = 2; m <= 15; ++m)
        if (n == 8 * f_seq(m)) return checked(eight_fm_code(m), want_s);
    for (int m = 4; m <= 15; ++m)
        if (n == f_seq(m)) return checked(perfect_code(m), want_s);
    return checked(fold_chain(theorem2_plan(n)), want_s);
}

StabilizerCode build_theorem2(std::int64_t n) {
    const Theorem2Plan plan = theorem2_plan(n);
    // generator accounting of the two chain shapes: 2m+4 in case a, 2m+5 in case b
    const int want_s = 2 * plan.m + (plan.case_id == 'a' ? 4 : 5);
    return checked(fold_chain(plan), want_s);
}

} // namespace stab3
