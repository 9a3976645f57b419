#pragma once

// JSON descriptors for boundary functions and Toeplitz symbols.
//
// A descriptor is an object with exactly one combinator key:
//   {"const": c}                      constant (c a number or [re, im])
//   {"power": k}                      z^k, integer k of either sign
//   {"power_half": {"n": k, "cut": -1}}   z^{k/2}, odd k, principal cut at -1
//   {"plus_one_power": p}             (1+z)^p, real p, principal branch
//   {"inner": {...}}                  inner function: zeros/atoms/power/constant
//   {"rational": {...}}               c prod(z - zero) / prod(z - pole)
//   {"kfun": {"theta": {...}, "lambda": [re, im]}}    reproducing kernel
//   {"ktilde": {"theta": {...}, "lambda": [re, im]}}  conjugate kernel
//   {"conj": <descriptor>}            samplewise complex conjugate
//   {"product": [<descriptor>, ...]}  samplewise product
//
// Parsing tracks branch-cut points and singular inner content alongside the
// samples, so a descriptor lands in a ToeplitzSymbol with honest tier flags,
// or in a HardyFunction gated on analyticity when a function is expected.

#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tklab/boundary.hpp"
#include "tklab/errors.hpp"
#include "tklab/grid.hpp"
#include "tklab/inner_function.hpp"
#include "tklab/toeplitz.hpp"

namespace tklab {

struct SymbolDescription {
    BoundaryFunction values;
    std::vector<cplx> jump_points;
    bool singular = false;
};

namespace detail {

inline cplx parse_complex(const nlohmann::json& j, const char* what) {
    if (j.is_number()) return cplx{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cplx{j[0].get<double>(), j[1].get<double>()};
    throw ParseError(std::string(what) + " expects a number or [re, im]");
}

inline std::vector<cplx> parse_complex_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " expects an array");
    std::vector<cplx> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(parse_complex(e, what));
    return out;
}

inline void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                                const char* what) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || item.key() == a;
        if (!ok)
            throw ParseError(std::string(what) + " has unknown key \"" + item.key() + "\"");
    }
}

inline InnerSpec parse_inner_spec(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("inner spec must be an object");
    reject_unknown_keys(j, {"zeros", "atoms", "power", "constant"}, "inner spec");
    InnerSpec s;
    if (j.contains("zeros")) s.zeros = parse_complex_list(j["zeros"], "inner zeros");
    if (j.contains("power")) {
        if (!j["power"].is_number_unsigned())
            throw ParseError("inner power expects a nonnegative integer");
        s.power = j["power"].get<unsigned>();
    }
    if (j.contains("constant")) s.constant = parse_complex(j["constant"], "inner constant");
    if (j.contains("atoms")) {
        if (!j["atoms"].is_array()) throw ParseError("inner atoms expects an array");
        for (const auto& a : j["atoms"]) {
            if (!a.is_object() || !a.contains("point") || !a.contains("mass"))
                throw ParseError("inner atom expects {\"point\": ..., \"mass\": ...}");
            reject_unknown_keys(a, {"point", "mass"}, "inner atom");
            if (!a["mass"].is_number()) throw ParseError("atom mass expects a number");
            s.atoms.emplace_back(parse_complex(a["point"], "atom point"),
                                 a["mass"].get<double>());
        }
    }
    return s;
}

inline void merge_jump(std::vector<cplx>& dst, cplx p) {
    for (const cplx& q : dst)
        if (std::abs(q - p) < 1e-12) return;
    dst.push_back(p);
}

} // namespace detail

inline SymbolDescription parse_symbol_description(const nlohmann::json& j,
                                                  const GridConfig& cfg) {
    cfg.validate();
    if (!j.is_object() || j.size() != 1)
        throw ParseError("descriptor expects an object with exactly one combinator key");
    const std::string key = j.begin().key();
    const nlohmann::json& v = j.begin().value();

    auto sampled = [&](auto fn) {
        std::vector<cplx> s(cfg.grid_size);
        for (std::size_t k = 0; k < cfg.grid_size; ++k) s[k] = fn(cfg.node(k), k);
        return BoundaryFunction::from_samples(std::move(s), cfg);
    };

    if (key == "const")
        return {BoundaryFunction::constant(detail::parse_complex(v, "const"), cfg), {}, false};

    if (key == "power") {
        if (!v.is_number_integer()) throw ParseError("power expects an integer");
        return {BoundaryFunction::monomial(v.get<long>(), cfg), {}, false};
    }

    if (key == "power_half") {
        if (!v.is_object() || !v.contains("n"))
            throw ParseError("power_half expects {\"n\": odd integer, \"cut\": -1}");
        detail::reject_unknown_keys(v, {"n", "cut"}, "power_half");
        if (!v["n"].is_number_integer()) throw ParseError("power_half n expects an integer");
        const long n = v["n"].get<long>();
        if (n % 2 == 0) throw EvenN("power_half: n = " + std::to_string(n));
        if (v.contains("cut") &&
            std::abs(detail::parse_complex(v["cut"], "power_half cut") - cplx{-1.0, 0.0}) > 1e-9)
            throw ParseError("power_half supports only the principal cut at -1");
        auto f = sampled([&](cplx, std::size_t k) {
            const double h = 0.5 * static_cast<double>(n) * cfg.signed_angle(k);
            return cplx{std::cos(h), std::sin(h)};
        });
        return {std::move(f), {cplx{-1.0, 0.0}}, false};
    }

    if (key == "plus_one_power") {
        if (!v.is_number()) throw ParseError("plus_one_power expects a number");
        const double p = v.get<double>();
        auto f = sampled([&](cplx t, std::size_t) { return std::pow(1.0 + t, p); });
        const bool integral = std::abs(p - std::round(p)) < 1e-12 && p >= 0.0;
        std::vector<cplx> jumps;
        if (!integral) jumps.push_back(cplx{-1.0, 0.0});
        return {std::move(f), std::move(jumps), false};
    }

    if (key == "inner") {
        auto inner = make_inner(detail::parse_inner_spec(v), cfg);
        return {inner.boundary(), {}, inner.has_atoms()};
    }

    if (key == "rational") {
        if (!v.is_object()) throw ParseError("rational expects an object");
        detail::reject_unknown_keys(v, {"zeros", "poles", "constant"}, "rational");
        std::vector<cplx> zeros, poles;
        cplx c{1.0, 0.0};
        if (v.contains("zeros")) zeros = detail::parse_complex_list(v["zeros"], "rational zeros");
        if (v.contains("poles")) poles = detail::parse_complex_list(v["poles"], "rational poles");
        if (v.contains("constant")) c = detail::parse_complex(v["constant"], "rational constant");
        for (const cplx& p : poles)
            if (std::abs(std::abs(p) - 1.0) < 1e-6)
                throw ParseError("rational pole sits on the unit circle");
        auto f = sampled([&](cplx t, std::size_t) {
            cplx val = c;
            for (const cplx& z : zeros) val *= (t - z);
            for (const cplx& p : poles) val /= (t - p);
            return val;
        });
        return {std::move(f), {}, false};
    }

    if (key == "kfun" || key == "ktilde") {
        if (!v.is_object() || !v.contains("theta"))
            throw ParseError(key + " expects {\"theta\": inner spec, \"lambda\": [re, im]}");
        detail::reject_unknown_keys(v, {"theta", "lambda"}, key.c_str());
        cplx lambda{0.0, 0.0};
        if (v.contains("lambda")) lambda = detail::parse_complex(v["lambda"], "lambda");
        auto theta = make_inner(detail::parse_inner_spec(v["theta"]), cfg);
        auto pair = model_kernels(theta, lambda);
        BoundaryFunction f = (key == "kfun") ? pair.k : pair.k_tilde;
        return {std::move(f), {}, theta.has_atoms()};
    }

    if (key == "conj") {
        auto inner = parse_symbol_description(v, cfg);
        return {complex_conjugate(inner.values), std::move(inner.jump_points), inner.singular};
    }

    if (key == "product") {
        if (!v.is_array() || v.empty())
            throw ParseError("product expects a nonempty array of descriptors");
        auto acc = parse_symbol_description(v[0], cfg);
        for (std::size_t i = 1; i < v.size(); ++i) {
            auto next = parse_symbol_description(v[i], cfg);
            acc.values = mul(acc.values, next.values);
            for (const cplx& p : next.jump_points) detail::merge_jump(acc.jump_points, p);
            acc.singular = acc.singular || next.singular;
        }
        return acc;
    }

    throw ParseError("unknown combinator \"" + key + "\"");
}

// Syntax errors carry the byte offset the JSON parser stopped at.
inline nlohmann::json parse_descriptor_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

inline ToeplitzSymbol descriptor_symbol(const nlohmann::json& j, const GridConfig& cfg) {
    auto d = parse_symbol_description(j, cfg);
    return ToeplitzSymbol(std::move(d.values), std::move(d.jump_points), d.singular);
}

inline ToeplitzSymbol parse_symbol(const std::string& text, const GridConfig& cfg) {
    return descriptor_symbol(parse_descriptor_text(text), cfg);
}

// Function role: the samples must describe an analytic function. Branch cuts
// and atom tails alias across the coefficient band, so those are admitted on
// structural grounds; everything else passes a banded negative-coefficient
// gate well above coefficient noise.
inline HardyFunction descriptor_function(const nlohmann::json& j, const GridConfig& cfg) {
    auto d = parse_symbol_description(j, cfg);
    if (d.singular || !d.jump_points.empty()) return HardyFunction::trusted(d.values);
    return HardyFunction::validated(d.values, 1e-6);
}

inline HardyFunction parse_function(const std::string& text, const GridConfig& cfg) {
    return descriptor_function(parse_descriptor_text(text), cfg);
}

} // namespace tklab
