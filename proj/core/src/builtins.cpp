#include "zetalg/builtins.hpp"

#include "zetalg/errors.hpp"
#include "zetalg/formulas.hpp"

namespace zetalg {

namespace {

Int parse_n(const std::string& name, const std::string& prefix) {
    std::string tail = name.substr(prefix.size());
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
        throw BadInput("bad parameter in builtin name '" + name + "'");
    return Int(tail);
}

TableAlgebra complete_graph(const Int& n) {
    if (n < 2)
        throw BadInput("kn needs n >= 2");
    // b_1^2 = (n-1) b_0 + (n-2) b_1, involution trivial
    std::vector<Int> tensor(8, Int(0));
    auto at = [&](int i, int j, int k) -> Int& { return tensor[static_cast<size_t>(((i * 2) + j) * 2 + k)]; };
    at(0, 0, 0) = 1;
    at(0, 1, 1) = 1;
    at(1, 0, 1) = 1;
    at(1, 1, 0) = n - 1;
    at(1, 1, 1) = n - 2;
    return TableAlgebra::validate(2, tensor, {0, 1});
}

TableAlgebra square_scheme() {
    // C_4: valencies (1, 1, 2); b_1 the diagonal pairing, b_2 the edges
    std::vector<Int> tensor(27, Int(0));
    auto at = [&](int i, int j, int k) -> Int& { return tensor[static_cast<size_t>(((i * 3) + j) * 3 + k)]; };
    at(0, 0, 0) = 1;
    at(0, 1, 1) = at(1, 0, 1) = 1;
    at(0, 2, 2) = at(2, 0, 2) = 1;
    at(1, 1, 0) = 1;
    at(1, 2, 2) = at(2, 1, 2) = 1;
    at(2, 2, 0) = 2;
    at(2, 2, 1) = 2;
    return TableAlgebra::validate(3, tensor, {0, 1, 2});
}

} // namespace

TableAlgebra make_builtin(const std::string& name) {
    if (name.rfind("kn:", 0) == 0)
        return complete_graph(parse_n(name, "kn:"));
    if (name == "petersen")
        return from_intersection_array({{Int(3), Int(2)}, {Int(1), Int(1)}});
    if (name == "square")
        return square_scheme();
    if (name == "gq21")
        return from_intersection_array({{Int(4), Int(2)}, {Int(1), Int(2)}});
    if (name.rfind("crown:", 0) == 0) {
        Int n = parse_n(name, "crown:");
        if (n < 3 || n % 2 == 0)
            throw BadInput("crown needs an odd n > 1");
        return from_intersection_array(
            {{n - 1, n - 2, Int(1)}, {Int(1), n - 2, n - 1}});
    }
    throw BadInput("unknown builtin '" + name + "'");
}

GlobalZeta builtin_reference(const std::string& name) {
    if (name.rfind("kn:", 0) == 0) {
        Int n = parse_n(name, "kn:");
        if (n < 2)
            throw BadInput("kn needs n >= 2");
        GlobalZeta Z;
        Z.rank = 2;
        for (int64_t p : prime_factors(n))
            Z.locals.emplace(p, complete_graph_local(n, p));
        return Z;
    }
    if (name == "petersen") {
        GlobalZeta Z;
        Z.rank = 3;
        for (int64_t p : {2, 3, 5})
            Z.locals.emplace(p, petersen_local(p));
        return Z;
    }
    if (name == "square") {
        GlobalZeta Z;
        Z.rank = 3;
        Z.locals.emplace(2, square_local());
        return Z;
    }
    if (name == "gq21") {
        GlobalZeta Z;
        Z.rank = 3;
        Z.locals.emplace(3, gq21_local());
        return Z;
    }
    if (name.rfind("crown:", 0) == 0)
        return crown_global(parse_n(name, "crown:"));
    throw BadInput("unknown builtin '" + name + "'");
}

std::vector<std::string> verify_builtin_names() {
    std::vector<std::string> names;
    for (int n : {2, 3, 4, 5, 6, 8, 9, 12})
        names.push_back("kn:" + std::to_string(n));
    names.push_back("petersen");
    names.push_back("square");
    names.push_back("gq21");
    names.push_back("crown:3");
    names.push_back("crown:5");
    return names;
}

} // namespace zetalg
