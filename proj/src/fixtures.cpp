#include "fixtures.hpp"

#include "errors.hpp"

namespace mirsym {
namespace fixtures {

namespace {

void set_op(AInftyCategory& c, std::vector<std::string> args, const std::string& out,
            const Rational& coeff) {
    std::vector<int> tuple;
    for (const auto& a : args) tuple.push_back(c.find_basis(a));
    int oidx = c.find_basis(out);
    if (oidx < 0) throw InternalError("fixture references unknown element");
    sparse_add(c.ops[static_cast<int>(tuple.size())][tuple], oidx, coeff);
}

}  // namespace

AInftyCategory dual_numbers() {
    AInftyCategory c;
    c.objects = {"*"};
    c.basis = {{"one", 0, 0, 0}, {"eps", 0, 0, 0}};
    c.identities = {{{0, Rational(1)}}};
    set_op(c, {"one", "one"}, "one", 1);
    set_op(c, {"one", "eps"}, "eps", 1);
    set_op(c, {"eps", "one"}, "eps", 1);
    // eps * eps = 0
    c.validate();
    return c;
}

AInftyCategory exterior_line() {
    AInftyCategory c;
    c.objects = {"*"};
    c.basis = {{"one", 0, 0, 0}, {"t", 1, 0, 0}};
    c.identities = {{{0, Rational(1)}}};
    set_op(c, {"one", "one"}, "one", 1);
    set_op(c, {"one", "t"}, "t", 1);
    set_op(c, {"t", "one"}, "t", 1);
    c.validate();
    return c;
}

AInftyCategory acyclic_dg() {
    AInftyCategory c;
    c.objects = {"*"};
    c.basis = {{"one", 0, 0, 0}, {"x", 0, 0, 0}, {"y", 1, 0, 0}};
    c.identities = {{{0, Rational(1)}}};
    set_op(c, {"x"}, "y", 1);  // m_1
    set_op(c, {"one", "one"}, "one", 1);
    set_op(c, {"one", "x"}, "x", 1);
    set_op(c, {"x", "one"}, "x", 1);
    set_op(c, {"one", "y"}, "y", 1);
    set_op(c, {"y", "one"}, "y", 1);
    // x*x = x*y = y*x = y*y = 0: Leibniz holds since d(x*x) = 0 = yx + xy
    // requires m_2(x,y) = -m_2(y,x); both are zero.
    c.validate();
    return c;
}

AInftyCategory two_object_acyclic_hom() {
    AInftyCategory c;
    c.objects = {"X", "Y"};
    c.basis = {{"idX", 0, 0, 0}, {"idY", 0, 1, 1}, {"v", -1, 0, 1}, {"u", 0, 0, 1}};
    c.identities = {{{0, Rational(1)}}, {{1, Rational(1)}}};
    // m_1(v) = u and u closed: every degree-0 cocycle is a boundary.
    set_op(c, {"v"}, "u", 1);
    set_op(c, {"idX", "idX"}, "idX", 1);
    set_op(c, {"idY", "idY"}, "idY", 1);
    for (const char* f : {"v", "u"}) {
        set_op(c, {"idX", f}, f, 1);
        set_op(c, {f, "idY"}, f, 1);
    }
    c.validate();
    return c;
}

AInftyCategory ground_field() {
    AInftyCategory c;
    c.objects = {"*"};
    c.basis = {{"one", 0, 0, 0}};
    c.identities = {{{0, Rational(1)}}};
    set_op(c, {"one", "one"}, "one", 1);
    c.validate();
    return c;
}

AInftyCategory perturb_m2(const AInftyCategory& c, const Rational& delta) {
    AInftyCategory out = c;
    auto it = out.ops.find(2);
    if (it == out.ops.end() || it->second.empty())
        throw InvalidArgument("no m_2 constants to perturb");
    auto& [tuple, elem] = *it->second.begin();
    (void)tuple;
    if (elem.empty()) throw InvalidArgument("empty m_2 entry");
    elem.front().second += delta;
    return out;
}

}  // namespace fixtures
}  // namespace mirsym
