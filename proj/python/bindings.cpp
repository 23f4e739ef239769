#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "roughver/coord_change.hpp"
#include "roughver/errors.hpp"
#include "roughver/lyndon.hpp"
#include "roughver/report.hpp"
#include "roughver/signature.hpp"
#include "roughver/toric.hpp"

namespace py = pybind11;
using namespace roughver;

namespace {

// Rationals cross the boundary as fractions.Fraction; inputs may be int,
// Fraction or "p/q" strings.
py::object to_py(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(format_rational(q));
}

Rational from_py(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) throw InvalidParameter("floats are not accepted; use Fraction or 'p/q'");
  return parse_rational(py::str(h).cast<std::string>());
}

py::dict poly_to_py(const FreePoly& p) {
  py::dict out;
  for (const auto& [w, c] : p.terms()) out[py::str(w.to_string(p.alphabet()))] = to_py(c);
  return out;
}

FreePoly poly_from_py(const py::dict& terms, int d) {
  FreePoly p(d);
  for (const auto& [w, c] : terms) p.add_term(Word::parse(py::str(w).cast<std::string>(), d), from_py(c));
  return p;
}

LieCoefficients lie_from_py(const py::dict& coeffs, int d, int m) {
  LieCoefficients c(d, m);
  for (const auto& [w, v] : coeffs) c.set(Word::parse(py::str(w).cast<std::string>(), d), from_py(v));
  return c;
}

std::vector<std::string> words_to_py(const std::vector<Word>& ws, int d) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string(d));
  return out;
}

py::dict row_to_py(const InvariantRow& r) {
  py::dict out;
  out["d"] = r.d;
  out["k"] = r.k;
  out["m"] = r.m;
  out["span"] = r.span;
  out["dim"] = r.dim;
  out["deg"] = r.deg ? py::cast(*r.deg) : py::none();
  out["quad"] = r.quad;
  out["note"] = r.note;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact signature-tensor algebra and toric invariants of Rough Veronese varieties";

  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(mod, "ResourceError", PyExc_RuntimeError);
  py::register_exception<InternalDisagreement>(mod, "InternalDisagreement", PyExc_AssertionError);

  // words and Lyndon words
  mod.def("lyndon_words", [](int d, int m) { return words_to_py(lyndon_words(d, m).words, d); },
          py::arg("d"), py::arg("m"));
  mod.def("lyndon_count", &lyndon_count, py::arg("length"), py::arg("d"));
  mod.def("lie_dimension", &lie_dimension, py::arg("d"), py::arg("m"));
  mod.def("cfl_factorize",
          [](const std::string& w, int d) { return words_to_py(cfl_factorize(Word::parse(w, d)), d); },
          py::arg("word"), py::arg("d"));
  mod.def("standard_bracketing",
          [](const std::string& w, int d) { return poly_to_py(standard_bracketing(Word::parse(w, d), d)); },
          py::arg("word"), py::arg("d"));

  // free algebra
  mod.def("concat",
          [](const py::dict& p, const py::dict& q, int d) {
            return poly_to_py(concat(poly_from_py(p, d), poly_from_py(q, d)));
          },
          py::arg("p"), py::arg("q"), py::arg("d"));
  mod.def("shuffle",
          [](const py::dict& p, const py::dict& q, int d) {
            return poly_to_py(shuffle(poly_from_py(p, d), poly_from_py(q, d)));
          },
          py::arg("p"), py::arg("q"), py::arg("d"));
  mod.def("pair",
          [](const py::dict& p, const py::dict& q, int d) {
            return to_py(pair(poly_from_py(p, d), poly_from_py(q, d)));
          },
          py::arg("p"), py::arg("q"), py::arg("d"));

  // signatures
  mod.def("rough_signature_level",
          [](const py::dict& coeffs, int d, int m, int k) {
            return poly_to_py(rough_signature_level(lie_from_py(coeffs, d, m), k).as_poly());
          },
          py::arg("coefficients"), py::arg("d"), py::arg("m"), py::arg("k"));
  mod.def("pwl_signature",
          [](const std::vector<std::vector<py::object>>& segments, int m) {
            PwlPath path{segments.empty() ? 0 : static_cast<int>(segments[0].size()), {}};
            for (const auto& seg : segments) {
              std::vector<Rational> v;
              for (const auto& x : seg) v.push_back(from_py(x));
              path.segments.push_back(std::move(v));
            }
            TensorSeries s = pwl_signature(path, m);
            GroupLikeCheck check = is_group_like(s);
            py::dict out;
            out["terms"] = poly_to_py(s.as_poly());
            out["group_like"] = check.group_like;
            return out;
          },
          py::arg("segments"), py::arg("m"));

  // coordinate change
  mod.def("psi", [](const py::dict& p, int d) { return poly_to_py(psi(poly_from_py(p, d))); },
          py::arg("p"), py::arg("d"));
  mod.def("s_poly", [](const std::string& w, int d) { return poly_to_py(s_poly(Word::parse(w, d), d)); },
          py::arg("word"), py::arg("d"));
  mod.def("coord_change",
          [](int d, int k, int m) {
            if (m == 0) m = k;
            CoordChangeMatrix mat = coord_change_matrix(d, k, m);
            py::list rows;
            for (std::size_t i = 0; i < mat.rows.size(); ++i) {
              rows.append(py::make_tuple(tuple_label(mat.index.tuples[i], d), poly_to_py(mat.rows[i])));
            }
            py::dict out;
            out["rows"] = rows;
            out["determinant"] = mat.is_square() ? to_py(mat.determinant()) : py::none();
            return out;
          },
          py::arg("d"), py::arg("k"), py::arg("m") = 0);
  mod.def("monomialized_signature",
          [](const py::dict& coeffs, int d, int m, int k) {
            py::list out;
            for (const Rational& q : monomialized_signature(lie_from_py(coeffs, d, m), k)) out.append(to_py(q));
            return out;
          },
          py::arg("coefficients"), py::arg("d"), py::arg("m"), py::arg("k"));

  // toric invariants
  mod.def("weighted_monomials", [](int d, int k, int m) { return weighted_monomials(d, k, m).exponents; },
          py::arg("d"), py::arg("k"), py::arg("m"));
  mod.def("span_dimension", &span_dimension, py::arg("d"), py::arg("k"), py::arg("m"));
  mod.def("variety_dimension", &variety_dimension, py::arg("d"), py::arg("k"), py::arg("m"));
  mod.def("toric_degree",
          [](int d, int k, int m, int cap) {
            DegreeOptions o;
            o.dimension_cap = cap;
            return toric_degree(d, k, m, o);
          },
          py::arg("d"), py::arg("k"), py::arg("m"), py::arg("cap") = 7);
  mod.def("quadric_space_dimension", &quadric_space_dimension, py::arg("d"), py::arg("k"), py::arg("m"));
  mod.def("hilbert_values",
          [](const std::vector<ExponentVector>& a, int n) { return hilbert_values(a, n); },
          py::arg("exponents"), py::arg("n_max"));
  mod.def("is_base_point_free",
          [](int d, int k, int m) {
            BasePointResult r = is_base_point_free(d, k, m);
            return py::make_tuple(r.base_point_free, r.witness ? py::cast(*r.witness) : py::none());
          },
          py::arg("d"), py::arg("k"), py::arg("m"));
  mod.def("cubic_obstruction_search",
          [](int k, const std::vector<int>& weights) { return cubic_obstruction_search(k, weights); },
          py::arg("k"), py::arg("weights"));
  mod.def("invariants",
          [](int d, int k, int m, int cap) {
            RunConfig cfg;
            cfg.dimension_cap = cap;
            return row_to_py(cmd_invariants(d, k, m, cfg));
          },
          py::arg("d"), py::arg("k"), py::arg("m"), py::arg("cap") = 7);
}
