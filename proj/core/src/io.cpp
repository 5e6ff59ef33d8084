#include "zetalg/io.hpp"

#include "io_detail.hpp"
#include "zetalg/errors.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace zetalg {

namespace {

using nlohmann::json;

bool is_decimal_string(const std::string& s) {
    size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

// One integer out of a JSON node that may be a number or a decimal string.
Int take_int(const json& node, const std::string& field) {
    if (node.is_number_unsigned()) return Int(node.get<uint64_t>());
    if (node.is_number_integer()) return Int(node.get<int64_t>());
    if (node.is_string()) {
        const std::string s = node.get<std::string>();
        if (!is_decimal_string(s))
            throw BadInput(field + ": \"" + s + "\" is not a decimal integer");
        return Int(s);
    }
    if (node.is_number_float())
        throw BadInput(field + ": expected an integer, got a non-integer number");
    throw BadInput(field + ": expected an integer (number or decimal string)");
}

int64_t take_small_int(const json& node, const std::string& field) {
    Int v = take_int(node, field);
    if (v < std::numeric_limits<int64_t>::min() || v > std::numeric_limits<int64_t>::max())
        throw BadInput(field + ": value does not fit in 64 bits");
    return v.convert_to<int64_t>();
}

const json& require_array(const json& node, size_t len, const std::string& field) {
    if (!node.is_array())
        throw BadInput(field + ": expected an array");
    if (node.size() != len)
        throw BadInput(field + ": expected length " + std::to_string(len) +
                       ", got " + std::to_string(node.size()));
    return node;
}

TableAlgebra parse_tensor_form(const json& doc) {
    if (!doc.contains("rank")) throw BadInput("rank: missing");
    int64_t rank = take_small_int(doc["rank"], "rank");
    if (rank < 1) throw BadInput("rank: must be a positive integer");
    if (rank > 512) throw BadInput("rank: larger than supported (512)");
    const size_t r = static_cast<size_t>(rank);

    if (!doc.contains("tensor")) throw BadInput("tensor: missing");
    if (!doc.contains("involution")) throw BadInput("involution: missing");

    std::vector<Int> tensor(r * r * r);
    const json& t = require_array(doc["tensor"], r, "tensor");
    for (size_t i = 0; i < r; ++i) {
        const std::string fi = "tensor[" + std::to_string(i) + "]";
        const json& ti = require_array(t[i], r, fi);
        for (size_t j = 0; j < r; ++j) {
            const std::string fij = fi + "[" + std::to_string(j) + "]";
            const json& tij = require_array(ti[j], r, fij);
            for (size_t k = 0; k < r; ++k)
                tensor[(i * r + j) * r + k] =
                    take_int(tij[k], fij + "[" + std::to_string(k) + "]");
        }
    }

    std::vector<int> inv(r);
    const json& s = require_array(doc["involution"], r, "involution");
    for (size_t i = 0; i < r; ++i) {
        const std::string fi = "involution[" + std::to_string(i) + "]";
        int64_t v = take_small_int(s[i], fi);
        if (v < 0 || v >= rank)
            throw BadInput(fi + ": index " + std::to_string(v) + " out of range");
        inv[i] = static_cast<int>(v);
    }

    return TableAlgebra::validate(static_cast<int>(rank), std::move(tensor), std::move(inv));
}

TableAlgebra parse_intersection_form(const json& node) {
    if (!node.is_object())
        throw BadInput("intersection_array: expected an object with \"b\" and \"c\"");
    if (!node.contains("b")) throw BadInput("intersection_array.b: missing");
    if (!node.contains("c")) throw BadInput("intersection_array.c: missing");
    const json& jb = node["b"];
    const json& jc = node["c"];
    if (!jb.is_array() || jb.empty())
        throw BadInput("intersection_array.b: expected a nonempty array");
    if (!jc.is_array() || jc.size() != jb.size())
        throw BadInput("intersection_array.c: expected an array of the same length as b");

    IntersectionArray arr;
    for (size_t i = 0; i < jb.size(); ++i)
        arr.b.push_back(take_int(jb[i], "intersection_array.b[" + std::to_string(i) + "]"));
    for (size_t i = 0; i < jc.size(); ++i)
        arr.c.push_back(take_int(jc[i], "intersection_array.c[" + std::to_string(i) + "]"));
    return from_intersection_array(arr);
}

} // namespace

TableAlgebra parse_algebra_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw BadInput(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw BadInput("input: top-level value must be a JSON object");

    const bool has_tensor =
        doc.contains("rank") || doc.contains("tensor") || doc.contains("involution");
    if (doc.contains("intersection_array")) {
        if (has_tensor)
            throw BadInput("input: give either {rank, tensor, involution} or "
                           "{intersection_array}, not both");
        return parse_intersection_form(doc["intersection_array"]);
    }
    if (!has_tensor)
        throw BadInput("input: expected {rank, tensor, involution} or {intersection_array}");
    return parse_tensor_form(doc);
}

namespace detail {

ordered_json json_int(const Int& v) {
    static const Int lo = Int(std::numeric_limits<int64_t>::min());
    static const Int hi = Int(std::numeric_limits<int64_t>::max());
    if (v >= lo && v <= hi) return ordered_json(v.convert_to<int64_t>());
    return ordered_json(v.str());
}

ordered_json json_rat(const Rat& q) {
    Int num = numerator_of(q);
    Int den = denominator_of(q);
    if (den == 1) return ordered_json(num.str());
    return ordered_json(num.str() + "/" + den.str());
}

ordered_json json_int_list(const std::vector<Int>& v) {
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(json_int(x));
    return a;
}

ordered_json json_local(const LocalZeta& z) {
    ordered_json j;
    j["p"] = z.p;
    j["r"] = z.rank;
    j["numerator"] = json_int_list(z.numerator);
    return j;
}

ordered_json json_global(const GlobalZeta& z) {
    ordered_json j;
    j["rank"] = z.rank;
    ordered_json locals = ordered_json::object();
    for (const auto& [p, zp] : z.locals) locals[std::to_string(p)] = json_local(zp);
    j["locals"] = std::move(locals);
    return j;
}

ordered_json json_plattice(const PLattice& L) {
    ordered_json j;
    j["p"] = L.p();
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < L.rank(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < L.rank(); ++k)
            row.push_back(plattice_entry_string(L.entry(i, k), L.p()));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

} // namespace detail

std::string local_zeta_to_json(const LocalZeta& z) { return detail::json_local(z).dump(); }
std::string global_zeta_to_json(const GlobalZeta& z) { return detail::json_global(z).dump(); }
std::string plattice_to_json(const PLattice& L) { return detail::json_plattice(L).dump(); }

std::string plattice_entry_string(const Rat& x, int64_t p) {
    Int num = numerator_of(x);
    Int den = denominator_of(x);
    if (den == 1) return num.str();
    int64_t e = valuation(den, p);
    if (pow_int(Int(p), e) != den)
        throw BadInput("lattice entry denominator " + den.str() +
                       " is not a power of " + std::to_string(p));
    return num.str() + "/" + std::to_string(p) + "^" + std::to_string(e);
}

std::string int_to_json_scalar(const Int& v) { return detail::json_int(v).dump(); }

} // namespace zetalg
