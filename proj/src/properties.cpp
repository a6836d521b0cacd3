#include "loops/properties.hpp"


namespace loops {

namespace {

CheckResult pass(std::uint64_t checked) {
    CheckResult r;
    r.holds = true;
    r.checked = checked;
    return r;
}

CheckResult fail(std::vector<int> witness, Prop which, std::uint64_t checked) {
    CheckResult r;
    r.holds = false;
    r.witness = std::move(witness);
    r.witness_prop = which;
    r.checked = checked;
    return r;
}

CheckResult check_bol(const Loop& l) {
    std::uint64_t k = 0;
    const int n = l.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                ++k;
                // (xy*z)y = x(yz*y)
                if (l.mul(l.mul(l.mul(x, y), z), y) !=
                    l.mul(x, l.mul(l.mul(y, z), y)))
                    return fail({x, y, z}, Prop::BOL, k);
            }
    return pass(k);
}

CheckResult check_s2_bol(const SpecialLoop& gh) {
    std::uint64_t k = 0;
    const Loop& l = gh.loop();
    const int n = l.order();
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
            for (Elem s : gh.subset()) {
                ++k;
                // (xs*z)s = x(sz*s)
                if (l.mul(l.mul(l.mul(x, s), z), s) !=
                    l.mul(x, l.mul(l.mul(s, z), s)))
                    return fail({x, z, s}, Prop::S2_BOL, k);
            }
    return pass(k);
}

// yx*x^rho = y
CheckResult check_rip(const Loop& l) {
    std::uint64_t k = 0;
    for (int x = 0; x < l.order(); ++x)
        for (int y = 0; y < l.order(); ++y) {
            ++k;
            if (l.mul(l.mul(y, x), l.right_inv(x)) != y)
                return fail({x, y}, Prop::RIP, k);
        }
    return pass(k);
}

// x^lambda*(xy) = y
CheckResult check_lip(const Loop& l) {
    std::uint64_t k = 0;
    for (int x = 0; x < l.order(); ++x)
        for (int y = 0; y < l.order(); ++y) {
            ++k;
            if (l.mul(l.left_inv(x), l.mul(x, y)) != y)
                return fail({x, y}, Prop::LIP, k);
        }
    return pass(k);
}

// ys*s^rho = y
CheckResult check_s2_rip(const SpecialLoop& gh) {
    std::uint64_t k = 0;
    const Loop& l = gh.loop();
    for (int y = 0; y < l.order(); ++y)
        for (Elem s : gh.subset()) {
            ++k;
            if (l.mul(l.mul(y, s), l.right_inv(s)) != y)
                return fail({y, s}, Prop::S2_RIP, k);
        }
    return pass(k);
}

// s^lambda*(sy) = y
CheckResult check_s2_lip(const SpecialLoop& gh) {
    std::uint64_t k = 0;
    const Loop& l = gh.loop();
    for (int y = 0; y < l.order(); ++y)
        for (Elem s : gh.subset()) {
            ++k;
            if (l.mul(l.left_inv(s), l.mul(s, y)) != y)
                return fail({y, s}, Prop::S2_LIP, k);
        }
    return pass(k);
}

// sy*y^rho = s
CheckResult check_s3_rip(const SpecialLoop& gh) {
    std::uint64_t k = 0;
    const Loop& l = gh.loop();
    for (int y = 0; y < l.order(); ++y)
        for (Elem s : gh.subset()) {
            ++k;
            if (l.mul(l.mul(s, y), l.right_inv(y)) != s)
                return fail({y, s}, Prop::S3_RIP, k);
        }
    return pass(k);
}

// y*xx = yx*x
CheckResult check_rap(const Loop& l) {
    std::uint64_t k = 0;
    for (int x = 0; x < l.order(); ++x)
        for (int y = 0; y < l.order(); ++y) {
            ++k;
            if (l.mul(y, l.mul(x, x)) != l.mul(l.mul(y, x), x))
                return fail({x, y}, Prop::RAP, k);
        }
    return pass(k);
}

// xx*y = x*xy
CheckResult check_lap(const Loop& l) {
    std::uint64_t k = 0;
    for (int x = 0; x < l.order(); ++x)
        for (int y = 0; y < l.order(); ++y) {
            ++k;
            if (l.mul(l.mul(x, x), y) != l.mul(x, l.mul(x, y)))
                return fail({x, y}, Prop::LAP, k);
        }
    return pass(k);
}

// y*ss = ys*s
CheckResult check_s2_rap(const SpecialLoop& gh) {
    std::uint64_t k = 0;
    const Loop& l = gh.loop();
    for (int y = 0; y < l.order(); ++y)
        for (Elem s : gh.subset()) {
            ++k;
            if (l.mul(y, l.mul(s, s)) != l.mul(l.mul(y, s), s))
                return fail({y, s}, Prop::S2_RAP, k);
        }
    return pass(k);
}

// ss*y = s*sy
CheckResult check_s2_lap(const SpecialLoop& gh) {
    std::uint64_t k = 0;
    const Loop& l = gh.loop();
    for (int y = 0; y < l.order(); ++y)
        for (Elem s : gh.subset()) {
            ++k;
            if (l.mul(l.mul(s, s), y) != l.mul(s, l.mul(s, y)))
                return fail({y, s}, Prop::S2_LAP, k);
        }
    return pass(k);
}

CheckResult conjunction(CheckResult a, CheckResult b) {
    if (!a.holds) return a;
    b.checked += a.checked;
    return b;
}

// R_{b^n} = R_b^n for one fixed b, n swept 0..maxN then -1..-maxN.
// Witness layout: (x, b, n).
CheckResult check_power_alternative(const Loop& l, const std::vector<Elem>& pivots,
                                    int max_n, Prop tag) {
    std::uint64_t k = 0;
    std::vector<long> exponents;
    for (int n = 0; n <= max_n; ++n) exponents.push_back(n);
    for (int n = 1; n <= max_n; ++n) exponents.push_back(-n);
    for (int x = 0; x < l.order(); ++x)
        for (Elem b : pivots)
            for (long n : exponents) {
                ++k;
                if (l.mul(x, l.power(b, n)) != l.power_shift(x, b, n))
                    return fail({x, b, int(n)}, tag, k);
            }
    return pass(k);
}

CheckResult check_nuclear_square(const SpecialLoop& gh) {
    std::uint64_t k = 0;
    const Loop& l = gh.loop();
    const int n = l.order();
    for (Elem s : gh.subset()) {
        Elem sq = l.mul(s, s);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                ++k;
                // sq must lie in the right nucleus: y*(x*sq) = (yx)*sq
                if (l.mul(y, l.mul(x, sq)) != l.mul(l.mul(y, x), sq))
                    return fail({s, x, y}, Prop::NUCLEAR_SQUARE, k);
            }
    }
    return pass(k);
}

CheckResult check_exponent2(const SpecialLoop& gh) {
    std::uint64_t k = 0;
    const Loop& l = gh.loop();
    for (Elem s : gh.subset()) {
        ++k;
        if (l.mul(s, s) != l.identity())
            return fail({s}, Prop::EXPONENT2, k);
    }
    return pass(k);
}

}  // namespace

CheckResult check(const SpecialLoop& gh, PropertyId p) {
    const Loop& l = gh.loop();
    switch (p.tag) {
        case Prop::BOL: return check_bol(l);
        case Prop::S2_BOL: return check_s2_bol(gh);
        case Prop::RIP: return check_rip(l);
        case Prop::LIP: return check_lip(l);
        case Prop::IP: return conjunction(check_rip(l), check_lip(l));
        case Prop::S2_RIP: return check_s2_rip(gh);
        case Prop::S2_LIP: return check_s2_lip(gh);
        case Prop::S2_IP: return conjunction(check_s2_rip(gh), check_s2_lip(gh));
        case Prop::S3_RIP: return check_s3_rip(gh);
        case Prop::RAP: return check_rap(l);
        case Prop::LAP: return check_lap(l);
        case Prop::AP: return conjunction(check_rap(l), check_lap(l));
        case Prop::S2_RAP: return check_s2_rap(gh);
        case Prop::S2_LAP: return check_s2_lap(gh);
        case Prop::S2_AP: return conjunction(check_s2_rap(gh), check_s2_lap(gh));
        case Prop::RPAP: {
            std::vector<Elem> everyone(static_cast<std::size_t>(l.order()));
            for (int i = 0; i < l.order(); ++i)
                everyone[static_cast<std::size_t>(i)] = Elem(i);
            return check_power_alternative(l, everyone, p.max_n, Prop::RPAP);
        }
        case Prop::S_RPAP:
            return check_power_alternative(l, gh.subset(), p.max_n, Prop::S_RPAP);
        case Prop::NUCLEAR_SQUARE: return check_nuclear_square(gh);
        case Prop::EXPONENT2: return check_exponent2(gh);
    }
    throw UnsupportedProperty();
}

std::vector<Elem> right_nucleus(const Loop& l) {
    const int n = l.order();
    std::vector<Elem> out;
    for (int a = 0; a < n; ++a) {
        bool in = true;
        for (int x = 0; x < n && in; ++x)
            for (int y = 0; y < n && in; ++y)
                if (l.mul(y, l.mul(x, a)) != l.mul(l.mul(y, x), a)) in = false;
        if (in) out.push_back(Elem(a));
    }
    return out;
}

std::vector<Elem> smarandache_right_nucleus(const SpecialLoop& gh) {
    std::vector<Elem> nuc = right_nucleus(gh.loop());
    std::vector<Elem> out;
    for (Elem a : nuc)
        if (gh.in_subloop(a)) out.push_back(a);
    return out;
}

const char* prop_name(Prop p) {
    switch (p) {
        case Prop::BOL: return "BOL";
        case Prop::S2_BOL: return "S2_BOL";
        case Prop::RIP: return "RIP";
        case Prop::LIP: return "LIP";
        case Prop::IP: return "IP";
        case Prop::S2_RIP: return "S2_RIP";
        case Prop::S2_LIP: return "S2_LIP";
        case Prop::S2_IP: return "S2_IP";
        case Prop::S3_RIP: return "S3_RIP";
        case Prop::RAP: return "RAP";
        case Prop::LAP: return "LAP";
        case Prop::AP: return "AP";
        case Prop::S2_RAP: return "S2_RAP";
        case Prop::S2_LAP: return "S2_LAP";
        case Prop::S2_AP: return "S2_AP";
        case Prop::RPAP: return "RPAP";
        case Prop::S_RPAP: return "S_RPAP";
        case Prop::NUCLEAR_SQUARE: return "NUCLEAR_SQUARE";
        case Prop::EXPONENT2: return "EXPONENT2";
    }
    return "?";
}

std::optional<Prop> prop_from_name(std::string_view name) {
    for (Prop p : kAllProps)
        if (name == prop_name(p)) return p;
    return std::nullopt;
}

}  // namespace loops
