#include "stab3/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace stab3 {

int hamming_s(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("hamming_s needs n >= 1");
    return std::bit_width(static_cast<std::uint64_t>(3 * n));
}

std::int64_t f_seq(int m) {
    if (m < 0 || m > 31) throw std::invalid_argument("f_seq supports 0 <= m <= 31");
    std::int64_t f = 0;
    for (int i = 0; i < m; ++i) f = 4 * f + 1;
    return f;
}

const char* family_name(LengthFamily f) {
    switch (f) {
        case LengthFamily::plain_a: return "plain_a";
        case LengthFamily::plain_b: return "plain_b";
        case LengthFamily::perfect_8fm: return "perfect_8fm";
        case LengthFamily::perfect_fm: return "perfect_fm";
        case LengthFamily::upper_u: return "upper_u";
        case LengthFamily::lp_l: return "lp_l";
        case LengthFamily::small: return "small";
        case LengthFamily::degenerate_6: return "degenerate_6";
    }
    return "?";
}

namespace {

constexpr std::array<int, 38> kSmallS = [] {
    std::array<int, 38> t{};
    t[5] = 4; t[6] = 5; t[7] = 6; t[8] = 5;
    for (int n = 9; n <= 17; ++n) t[n] = 6;
    t[18] = 7; t[19] = 7; t[20] = 7; t[21] = 6;
    for (int n = 22; n <= 37; ++n) t[n] = 7;
    return t;
}();

} // namespace

LengthClass classify_length(std::int64_t n) {
    if (n < 5) throw std::invalid_argument("no distance-3 code below n = 5");
    LengthClass c;
    c.n = n;
    const int sH = hamming_s(n);
    if (n == 6) {
        c.family = LengthFamily::degenerate_6;
        c.s_best = 5;
        return c;
    }
    for (int m = 2; m <= 31; ++m)
        if (f_seq(m) == n) {
            c.m = m;
            c.family = LengthFamily::perfect_fm;
            c.s_best = sH; // = 2m
            return c;
        }
    for (int m = 1; m <= 30; ++m)
        if (8 * f_seq(m) == n) {
            c.m = m;
            c.family = LengthFamily::perfect_8fm;
            c.s_best = sH; // = 2m + 3
            return c;
        }
    for (int m = 2; m <= 30; ++m)
        if (n == 8 * f_seq(m) - 1 || n == 8 * f_seq(m) - 2) {
            c.m = m;
            c.family = LengthFamily::upper_u;
            c.s_best = sH + 1;
            c.optimal_proven = false;
            return c;
        }
    for (int m = 1; m <= 30; ++m)
        if (n == 8 * f_seq(m) + 1 || n == 8 * f_seq(m) + 2) {
            c.m = m;
            c.family = LengthFamily::lp_l;
            c.s_best = sH + 1;
            return c;
        }
    for (int m = 1; m <= 29; ++m)
        if (n == f_seq(m + 2) - 1) {
            c.m = m;
            c.family = LengthFamily::lp_l;
            c.s_best = sH + 1;
            return c;
        }
    for (int m = 2; m <= 29; ++m)
        if (n == f_seq(m + 2) - 2 || n == f_seq(m + 2) - 3) {
            c.m = m;
            c.family = LengthFamily::upper_u;
            c.s_best = sH + 1;
            c.optimal_proven = false;
            return c;
        }
    if (n <= 37) {
        c.family = LengthFamily::small;
        c.s_best = kSmallS[static_cast<std::size_t>(n)];
        return c;
    }
    for (int m = 1; m <= 29; ++m) {
        if (8 * f_seq(m) + 3 <= n && n <= f_seq(m + 2) - 4) {
            c.m = m;
            c.family = LengthFamily::plain_a;
            c.s_best = sH;
            return c;
        }
        if (f_seq(m + 1) + 1 <= n && n <= 8 * f_seq(m) - 3) {
            c.m = m;
            c.family = LengthFamily::plain_b;
            c.s_best = sH;
            return c;
        }
    }
    throw std::logic_error("length classification gap");
}

WeightDistribution weight_distribution(const GeneratorBlock& b, int cap) {
    const int s = b.s();
    if (s > cap)
        throw std::invalid_argument("generator count " + std::to_string(s) +
                                    " exceeds enumeration cap " + std::to_string(cap));
    WeightDistribution w;
    w.a.assign(static_cast<std::size_t>(b.n) + 1, 0);
    Pauli cur = identity(b.n);
    w.a[0] += 1;
    const std::uint64_t total = std::uint64_t{1} << s;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur = multiply(cur, b.gens[static_cast<std::size_t>(std::countr_zero(i))]);
        w.a[static_cast<std::size_t>(weight(cur))] += 1;
    }
    return w;
}

LpIdentityReport check_lp_identities(int n, int s, const WeightDistribution& w) {
    LpIdentityReport r;
    r.a1_lhs = (std::int64_t{1} << s) * w.a[1];
    r.a2_lhs = (std::int64_t{1} << (s + 1)) * w.a[2];
    for (int i = 0; i <= n; ++i) {
        const std::int64_t ai = w.a[static_cast<std::size_t>(i)];
        r.a1_rhs += (3 * std::int64_t{n} - 4 * i) * ai;
        const std::int64_t t = 4 * std::int64_t{i} - 3 * n + 1;
        r.a2_rhs += (t * t - 3 * n - 1) * ai;
        if (i % 2 == 0) r.even_lhs += ai;
    }
    r.even_rhs = std::int64_t{1} << (s - 1);
    r.a1_ok = r.a1_lhs == r.a1_rhs;
    r.a2_ok = r.a2_lhs == r.a2_rhs;
    r.even_ok = r.even_lhs >= r.even_rhs;
    return r;
}

const char* cert_family_name(CertFamily f) {
    switch (f) {
        case CertFamily::none: return "none";
        case CertFamily::fm2_minus_1: return "f_{m+2}-1";
        case CertFamily::eight_fm_plus_1: return "8f_m+1";
        case CertFamily::eight_fm_plus_2: return "8f_m+2";
    }
    return "?";
}

bool CertificateReport::all_pass() const {
    if (family == CertFamily::none) return false;
    for (const CertCheck& c : checks)
        if (!c.ok) return false;
    return true;
}

CertificateReport lp_certificate(std::int64_t n) {
    CertificateReport r;
    r.n = n;
    const int sH = hamming_s(n);
    for (int m = 1; m <= 29 && r.family == CertFamily::none; ++m) {
        if (n == f_seq(m + 2) - 1) { r.family = CertFamily::fm2_minus_1; r.m = m; }
        else if (n == 8 * f_seq(m) + 1) { r.family = CertFamily::eight_fm_plus_1; r.m = m; }
        else if (n == 8 * f_seq(m) + 2) { r.family = CertFamily::eight_fm_plus_2; r.m = m; }
    }
    auto push = [&r](std::string name, bool ok, std::int64_t lhs, std::int64_t rhs) {
        r.checks.push_back(CertCheck{std::move(name), ok, lhs, rhs});
    };
    switch (r.family) {
        case CertFamily::none:
            r.strengthened_bound = sH;
            return r;
        case CertFamily::fm2_minus_1: {
            const std::int64_t l = 3 * n / 4;
            auto h = [l](std::int64_t x) { return 16 * (x - l) * (x - 1 - l); };
            push("divisibility", 3 * n % 4 == 0, 3 * n % 4, 0);
            push("l-odd", l % 2 == 1, l % 2, 1);
            std::int64_t hmin = h(0);
            for (std::int64_t x = 1; x <= n; ++x) hmin = std::min(hmin, h(x));
            push("h-sweep-nonneg", hmin >= 0, hmin, 0);
            push("h1-strict", h(1) > 2 * (3 * n + 4), h(1), 2 * (3 * n + 4));
            push("h2-weak", h(2) >= 2 * (3 * n + 4), h(2), 2 * (3 * n + 4));
            break;
        }
        case CertFamily::eight_fm_plus_1: {
            const std::int64_t u4 = 3 * n + 1;
            auto f = [u4](std::int64_t x) { return (4 * x - u4) * (4 * x - u4); };
            push("divisibility", u4 % 4 == 0, u4 % 4, 0);
            push("quarter-odd", (u4 / 4) % 2 == 1, (u4 / 4) % 2, 1);
            push("f0-strict", f(0) > (3 * n + 5) * (3 * n - 7) + 16, f(0), (3 * n + 5) * (3 * n - 7) + 16);
            push("f1-strict", f(1) > 4 * (3 * n + 5), f(1), 4 * (3 * n + 5));
            push("f2-strict", f(2) > 2 * (3 * n + 5) + 16, f(2), 2 * (3 * n + 5) + 16);
            std::int64_t fmin = f(0);
            for (std::int64_t x = 2; x <= n; x += 2) fmin = std::min(fmin, f(x));
            push("f-even-sweep", fmin >= 16, fmin, 16);
            break;
        }
        case CertFamily::eight_fm_plus_2: {
            auto g = [n](std::int64_t x) { return (4 * x - (3 * n + 2)) * (4 * x - (3 * n - 2)); };
            push("divisibility", (3 * n + 2) % 4 == 0, (3 * n + 2) % 4, 0);
            std::int64_t gmin = g(0);
            for (std::int64_t x = 1; x <= n; ++x) gmin = std::min(gmin, g(x));
            push("g-sweep-nonneg", gmin >= 0, gmin, 0);
            push("g0-strict", g(0) > (3 * n + 2) * (3 * n - 4), g(0), (3 * n + 2) * (3 * n - 4));
            push("g1-strict", g(1) > 2 * (3 * n + 2), g(1), 2 * (3 * n + 2));
            push("g2-strict", g(2) > 2 * (3 * n + 2), g(2), 2 * (3 * n + 2));
            break;
        }
    }
    r.strengthened_bound = r.all_pass() ? sH + 1 : sH;
    return r;
}

} // namespace stab3
