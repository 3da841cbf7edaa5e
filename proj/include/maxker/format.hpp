// Text formats shared by the CLI and tests.
//
//   field spec:      p^e^n[/modulus-int]     e.g.  2^1^4/19  for F_2[x]/(x^4+x+1)
//   polynomial spec: s=<int>;a=[<int>,...]   coefficients a_0..a_k as element codes
//
// Element codes are the base-p digit encoding of gf.hpp, printed in decimal.

#ifndef MAXKER_FORMAT_HPP
#define MAXKER_FORMAT_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "maxker/gf.hpp"
#include "maxker/linpoly.hpp"

namespace maxker {

namespace detail {
inline std::uint64_t parse_u64(std::string_view sv, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    require(ec == std::errc() && ptr == sv.data() + sv.size(), errc::bad_spec,
            std::string("malformed integer in ") + what + ": '" + std::string(sv) + "'");
    return value;
}

inline std::vector<std::string_view> split(std::string_view sv, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = sv.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(sv.substr(start));
            break;
        }
        parts.push_back(sv.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

inline std::string_view strip(std::string_view sv) {
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t')) sv.remove_suffix(1);
    return sv;
}
}  // namespace detail

struct FieldSpec {
    std::uint64_t p = 0;
    unsigned e = 0;
    unsigned n = 0;
    std::uint64_t modulus_code = 0;  // 0 means "pick the default"
    bool has_modulus = false;
};

inline FieldSpec parse_field_spec(std::string_view sv) {
    sv = detail::strip(sv);
    FieldSpec spec;
    auto slash = detail::split(sv, '/');
    require(slash.size() <= 2, errc::bad_spec, "field spec has more than one '/'");
    auto parts = detail::split(slash[0], '^');
    require(parts.size() == 3, errc::bad_spec,
            "field spec must look like p^e^n[/modulus-int]");
    spec.p = detail::parse_u64(detail::strip(parts[0]), "field spec");
    spec.e = static_cast<unsigned>(detail::parse_u64(detail::strip(parts[1]), "field spec"));
    spec.n = static_cast<unsigned>(detail::parse_u64(detail::strip(parts[2]), "field spec"));
    if (slash.size() == 2) {
        spec.modulus_code = detail::parse_u64(detail::strip(slash[1]), "modulus");
        spec.has_modulus = true;
    }
    return spec;
}

inline Field make_field(const FieldSpec& spec) {
    require(spec.p >= 2 && spec.e >= 1 && spec.n >= 1, errc::bad_spec,
            "field spec needs p >= 2, e >= 1, n >= 1");
    require(is_prime_u64(spec.p), errc::not_prime, "p is not prime");
    std::vector<std::uint32_t> digits;
    if (spec.has_modulus) {
        std::uint64_t c = spec.modulus_code;
        require(c > 0, errc::bad_modulus, "modulus code must be positive");
        while (c) {
            digits.push_back(static_cast<std::uint32_t>(c % spec.p));
            c /= spec.p;
        }
    }
    return Field(spec.p, spec.e, spec.n, std::move(digits));
}

inline Field make_field(std::string_view sv) { return make_field(parse_field_spec(sv)); }

inline std::string field_spec_string(const Field& F) {
    return std::to_string(F.p()) + "^" + std::to_string(F.e()) + "^" + std::to_string(F.n()) +
           "/" + std::to_string(F.modulus_code());
}

// "s=<int>;a=[c0,c1,...]" -> LinPoly with coefficients a_0..a_k
inline LinPoly parse_poly_spec(std::string_view sv, const Field& F) {
    auto parts = detail::split(sv, ';');
    require(parts.size() == 2, errc::bad_spec, "poly spec must look like s=<int>;a=[...]");
    auto s_part = detail::strip(parts[0]);
    require(s_part.substr(0, 2) == "s=", errc::bad_spec, "poly spec must start with s=");
    long s = static_cast<long>(detail::parse_u64(detail::strip(s_part.substr(2)), "s"));
    auto a_part = detail::strip(parts[1]);
    require(a_part.substr(0, 2) == "a=", errc::bad_spec, "poly spec needs a=[...]");
    a_part = detail::strip(a_part.substr(2));
    require(a_part.size() >= 2 && a_part.front() == '[' && a_part.back() == ']', errc::bad_spec,
            "coefficient list must be bracketed");
    a_part = a_part.substr(1, a_part.size() - 2);
    std::vector<Elem> coeffs;
    if (!detail::strip(a_part).empty())
        for (auto tok : detail::split(a_part, ','))
            coeffs.push_back(F.elem(detail::parse_u64(detail::strip(tok), "coefficient")));
    require(!coeffs.empty(), errc::bad_spec, "empty coefficient list");
    return LinPoly(F, s, coeffs);
}

inline std::string poly_spec_string(const LinPoly& f) {
    std::string out = "s=" + std::to_string(f.s() == 0 ? 1 : f.s()) + ";a=[";
    if (f.is_zero()) {
        out += "0";
    } else {
        auto a = f.coeffs_s();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(a[i].v);
        }
    }
    out += "]";
    return out;
}

}  // namespace maxker

#endif
