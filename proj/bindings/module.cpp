// Python bindings for the exact Bernoulli-class library. Rationals cross
// the boundary as a dedicated Rational class convertible from int and from
// canonical "num/den" strings; coalitions and player sets cross as lists of
// 1-based player indices.

#include "bernpoly/algebra.hpp"
#include "bernpoly/dependence.hpp"
#include "bernpoly/errors.hpp"
#include "bernpoly/games.hpp"
#include "bernpoly/io.hpp"
#include "bernpoly/pmf.hpp"
#include "bernpoly/polytope.hpp"
#include "bernpoly/reports.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bernpoly;

namespace {

Integer integer_from_py(const py::int_& value) {
  return Integer{py::str(value).cast<std::string>()};
}

py::int_ integer_to_py(const Integer& value) {
  PyObject* object = PyLong_FromString(value.str().c_str(), nullptr, 10);
  if (object == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(object);
}

unsigned players_to_mask(const std::vector<int>& players, int n) {
  unsigned mask = 0;
  for (int i : players) {
    if (i < 1 || i > n) throw OutOfRange{"player index out of range"};
    mask |= 1u << (i - 1);
  }
  return mask;
}

}  // namespace

PYBIND11_MODULE(bernpoly, m) {
  m.doc() = "Exact geometry, dependence structure and variance allocation of "
            "equal-margin Bernoulli classes";

  auto base = py::register_exception<Error>(m, "BernpolyError");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<NegativeMass>(m, "NegativeMass", base);
  py::register_exception<NotNormalized>(m, "NotNormalized", base);
  py::register_exception<DegenerateMargin>(m, "DegenerateMargin", base);
  py::register_exception<UnsupportedDimension>(m, "UnsupportedDimension", base);
  py::register_exception<OutOfRange>(m, "OutOfRange", base);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
  py::register_exception<NotAMember>(m, "NotAMember", base);
  py::register_exception<NotSigmaCm>(m, "NotSigmaCm", base);
  py::register_exception<InvalidWeights>(m, "InvalidWeights", base);
  py::register_exception<IoError>(m, "IoError", base);

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const std::string& text) { return parse_rational(text); }))
      .def(py::init([](const py::int_& n) { return Rational{integer_from_py(n)}; }))
      .def(py::init([](const py::int_& n, const py::int_& d) {
             Integer num = integer_from_py(n);
             Integer den = integer_from_py(d);
             if (den == 0) throw OutOfRange{"zero denominator"};
             if (den < 0) {
               num = -num;
               den = -den;
             }
             return Rational{num, den};
           }),
           py::arg("numerator"), py::arg("denominator"))
      .def_property_readonly(
          "numerator", [](const Rational& q) { return integer_to_py(numerator(q)); })
      .def_property_readonly(
          "denominator", [](const Rational& q) { return integer_to_py(denominator(q)); })
      .def("as_fraction",
           [](const Rational& q) {
             return py::module_::import("fractions").attr("Fraction")(to_string(q));
           })
      .def("__str__", [](const Rational& q) { return to_string(q); })
      .def("__repr__", [](const Rational& q) { return "Rational(\"" + to_string(q) + "\")"; })
      .def("__float__", [](const Rational& q) { return q.convert_to<double>(); })
      .def("__hash__", [](const Rational& q) { return py::hash(py::str(to_string(q))); })
      .def("__add__", [](const Rational& a, const Rational& b) { return Rational{a + b}; })
      .def("__sub__", [](const Rational& a, const Rational& b) { return Rational{a - b}; })
      .def("__mul__", [](const Rational& a, const Rational& b) { return Rational{a * b}; })
      .def("__truediv__",
           [](const Rational& a, const Rational& b) {
             if (b == 0) throw OutOfRange{"division by zero"};
             return Rational{a / b};
           })
      .def("__neg__", [](const Rational& a) { return Rational{-a}; })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);
  py::implicitly_convertible<py::str, Rational>();
  py::implicitly_convertible<py::int_, Rational>();

  m.def("parse_rational", [](const std::string& t) { return parse_rational(t); });
  m.def("to_decimal_string", &to_decimal_string, py::arg("value"), py::arg("digits"));

  py::class_<MarginParam>(m, "MarginParam")
      .def(py::init<Rational>())
      .def_property_readonly("p", &MarginParam::p)
      .def_property_readonly("s", [](const MarginParam& mp) { return integer_to_py(mp.s()); })
      .def_property_readonly("t", [](const MarginParam& mp) { return integer_to_py(mp.t()); })
      .def_property_readonly("c", &MarginParam::c)
      .def("__repr__",
           [](const MarginParam& mp) { return "MarginParam(\"" + to_string(mp.p()) + "\")"; })
      .def(py::self == py::self);
  py::implicitly_convertible<Rational, MarginParam>();
  py::implicitly_convertible<py::str, MarginParam>();

  py::class_<BernoulliPmf>(m, "BernoulliPmf")
      .def_property_readonly("d", &BernoulliPmf::dimension)
      .def_property_readonly("values", &BernoulliPmf::values)
      .def(
          "value",
          [](const BernoulliPmf& f, int atom) {
            if (atom < 0 || atom >= f.size()) throw OutOfRange{"atom index out of range"};
            return f.value(atom);
          },
          py::arg("atom"))
      .def("support", &BernoulliPmf::support)
      .def("__eq__", [](const BernoulliPmf& a, const BernoulliPmf& b) { return a == b; })
      .def("__repr__", [](const BernoulliPmf& f) {
        std::string out = "BernoulliPmf(d=" + std::to_string(f.dimension()) + ", [";
        for (int a = 0; a < f.size(); ++a) {
          if (a > 0) out += ", ";
          out += to_string(f.value(a));
        }
        return out + "])";
      });

  py::class_<SumPmf>(m, "SumPmf")
      .def_property_readonly("d", &SumPmf::dimension)
      .def_property_readonly("masses", &SumPmf::masses)
      .def("mean", &SumPmf::mean)
      .def("variance", &SumPmf::variance)
      .def("stop_loss", &SumPmf::stop_loss, py::arg("threshold"))
      .def("__eq__", [](const SumPmf& a, const SumPmf& b) { return a == b; });

  m.def("make_pmf", &make_pmf, py::arg("d"), py::arg("values"));
  m.def("margin", &margin, py::arg("f"), py::arg("i"));
  m.def("second_moment", &second_moment, py::arg("f"), py::arg("i"), py::arg("j"));
  m.def("correlation", &correlation, py::arg("f"), py::arg("i"), py::arg("j"));
  m.def("sum_distribution", &sum_distribution, py::arg("f"));
  m.def("variance_of_sum", &variance_of_sum, py::arg("f"));
  m.def("common_margin", &common_margin, py::arg("f"));
  m.def("class_param", &class_param, py::arg("f"));

  py::class_<ConstraintSystem>(m, "ConstraintSystem")
      .def(py::init<int, MarginParam>(), py::arg("d"), py::arg("p"))
      .def_property_readonly("d", &ConstraintSystem::dimension)
      .def_property_readonly("p", [](const ConstraintSystem& cs) { return cs.param().p(); })
      .def_property_readonly("matrix", &ConstraintSystem::matrix)
      .def("residual", &ConstraintSystem::residual, py::arg("f"));
  m.def("build_constraints", &build_constraints, py::arg("d"), py::arg("p"));

  py::class_<ExtremalSet>(m, "ExtremalSet")
      .def_property_readonly("d", [](const ExtremalSet& es) { return es.d; })
      .def_property_readonly("p", [](const ExtremalSet& es) { return es.p.p(); })
      .def_property_readonly("vertices", [](const ExtremalSet& es) { return es.vertices; })
      .def_property_readonly("tags",
                             [](const ExtremalSet& es) {
                               std::vector<std::string> out;
                               for (auto tag : es.tags) out.emplace_back(tag_name(tag));
                               return out;
                             })
      .def_property_readonly("names", [](const ExtremalSet& es) { return es.names; })
      .def("find", [](const ExtremalSet& es, const BernoulliPmf& f) { return es.find(f); })
      .def("__len__", [](const ExtremalSet& es) { return es.vertices.size(); });

  m.def("table1_column", &table1_column, py::arg("p"), py::arg("index"));
  m.def("table2_column", &table2_column, py::arg("p"), py::arg("index"));
  m.def("closed_form_extremals", &closed_form_extremals, py::arg("p"));
  m.def("enumerate_vertices_oracle", &enumerate_vertices_oracle, py::arg("cs"));
  m.def(
      "enumerate_vertices",
      [](int d, const MarginParam& p) {
        return enumerate_vertices_oracle(build_constraints(d, p));
      },
      py::arg("d"), py::arg("p"));
  m.def("is_member", &is_member, py::arg("cs"), py::arg("f"));
  m.def(
      "decompose",
      [](const ExtremalSet& es, const BernoulliPmf& f) {
        return decompose(es, f).weights;
      },
      py::arg("extremals"), py::arg("f"));
  m.def(
      "mix",
      [](const ExtremalSet& es, const std::vector<Rational>& weights) {
        return mix(es, ConvexWeights{weights});
      },
      py::arg("extremals"), py::arg("weights"));
  m.def("is_vertex", &is_vertex, py::arg("cs"), py::arg("f"));

  py::class_<MultilinearPoly>(m, "MultilinearPoly")
      .def_property_readonly("coefficients", &MultilinearPoly::coefficients)
      .def(
          "coefficient",
          [](const MultilinearPoly& poly, int mask) {
            if (mask < 0 || static_cast<size_t>(mask) >= poly.coefficients().size()) {
              throw OutOfRange{"exponent mask out of range"};
            }
            return poly.coefficient(mask);
          },
          py::arg("exponent_mask"))
      .def("is_zero", &MultilinearPoly::is_zero)
      .def("evaluate", &MultilinearPoly::evaluate, py::arg("point"))
      .def("__str__", &MultilinearPoly::to_string)
      .def("__eq__",
           [](const MultilinearPoly& a, const MultilinearPoly& b) { return a == b; });

  m.def("map_column", &map_column, py::arg("p"), py::arg("atom"));
  m.def("apply_map", &apply_map, py::arg("p"), py::arg("f"));
  m.def("kernel_basis", &kernel_basis, py::arg("d"), py::arg("p"));
  m.def("fundamental_polynomials", &fundamental_polynomials, py::arg("d") = 3);
  m.def("express_in_fundamentals", &express_in_fundamentals, py::arg("poly"));
  m.def("is_in_kernel", &is_in_kernel, py::arg("p"), py::arg("f"));

  py::class_<BivariatePmf>(m, "BivariatePmf")
      .def(py::init([](const std::vector<std::tuple<Rational, Rational, Rational>>& atoms) {
        std::vector<BivariateAtom> converted;
        converted.reserve(atoms.size());
        for (const auto& [x, y, mass] : atoms) converted.push_back({x, y, mass});
        return BivariatePmf{std::move(converted)};
      }))
      .def_property_readonly("atoms", [](const BivariatePmf& joint) {
        std::vector<std::tuple<Rational, Rational, Rational>> out;
        for (const auto& atom : joint.atoms()) out.emplace_back(atom.x, atom.y, atom.mass);
        return out;
      });

  m.def("is_countermonotone_pair", &is_countermonotone_pair, py::arg("joint"));
  m.def(
      "split_sum_pair",
      [](const BernoulliPmf& f, const std::vector<int>& players) {
        return split_sum_pair(f, players_to_mask(players, f.dimension()));
      },
      py::arg("f"), py::arg("players"));
  m.def("is_sigma_countermonotone", &is_sigma_countermonotone, py::arg("f"));
  m.def("convex_order_leq", &convex_order_leq, py::arg("a"), py::arg("b"));
  m.def("minimal_sum_law", &minimal_sum_law, py::arg("p"));
  m.def("is_sigma_cx_smallest", &is_sigma_cx_smallest, py::arg("f"));

  py::class_<SigmaCmPolytope>(m, "SigmaCmPolytope")
      .def_property_readonly("p", [](const SigmaCmPolytope& s) { return s.p.p(); })
      .def_property_readonly("generators",
                             [](const SigmaCmPolytope& s) { return s.generators; });
  m.def("sigma_cm_polytope", &sigma_cm_polytope, py::arg("p"));
  m.def("mu2_plus", &mu2_plus, py::arg("f"));
  m.def("exchangeable_member", &exchangeable_member, py::arg("p"));

  py::class_<CorrelationProfile>(m, "CorrelationProfile")
      .def_property_readonly("rho", [](const CorrelationProfile& c) { return c.rho; })
      .def_property_readonly("classification", [](const CorrelationProfile& c) {
        return std::string(pairwise_class_name(c.classification));
      });
  m.def("correlation_profile", &correlation_profile, py::arg("f"));
  m.def("classify_extremal_correlations", &classify_extremal_correlations, py::arg("p"));

  py::class_<CoalitionGame>(m, "CoalitionGame")
      .def(py::init<int, std::vector<Rational>>(), py::arg("players"), py::arg("values"))
      .def_property_readonly("players", &CoalitionGame::players)
      .def_property_readonly("values", &CoalitionGame::values)
      .def(
          "value",
          [](const CoalitionGame& g, const std::vector<int>& players) {
            return g.value(players_to_mask(players, g.players()));
          },
          py::arg("players"))
      .def_property_readonly("grand_value", &CoalitionGame::grand_value)
      .def("__eq__",
           [](const CoalitionGame& a, const CoalitionGame& b) { return a == b; });

  m.def("variance_game", &variance_game, py::arg("f"));
  m.def("shapley_formula",
        [](const CoalitionGame& g) { return shapley_formula(g).phis; });
  m.def("shapley_covariance",
        [](const BernoulliPmf& f) { return shapley_covariance(f).phis; });
  m.def("marginal_contribution_closed_form", &marginal_contribution_closed_form,
        py::arg("f"), py::arg("i"));
  m.def(
      "shapley_mixture",
      [](const MarginParam& p, const std::vector<Rational>& weights) {
        return shapley_mixture(p, ConvexWeights{weights}).phis;
      },
      py::arg("p"), py::arg("weights"));
  m.def("classify_modularity", [](const CoalitionGame& g) {
    return std::string(modularity_name(classify_modularity(g)));
  });
  m.def(
      "fuse_players",
      [](const CoalitionGame& g, const std::vector<int>& players) {
        return fuse_players(g, players_to_mask(players, g.players()));
      },
      py::arg("game"), py::arg("players"));
  m.def(
      "shapley_fusion_check",
      [](const BernoulliPmf& f, const std::vector<int>& players) {
        return shapley_fusion_check(f, players_to_mask(players, f.dimension()));
      },
      py::arg("f"), py::arg("players"));

  m.def("pmf_to_json", &pmf_to_json_string, py::arg("f"));
  m.def("pmf_from_json", &pmf_from_json_string, py::arg("text"));
  m.def("extremal_set_to_csv", &extremal_set_to_csv, py::arg("extremals"));
  m.def("verify_closed_form",
        [](const MarginParam& p) { return verify_closed_form(p).pass(); });
  m.def("default_verify_grid", &default_verify_grid, py::arg("max_denominator") = 12);
}
