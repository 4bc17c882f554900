#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "suffixient/driver.hpp"
#include "suffixient/errors.hpp"
#include "suffixient/generators.hpp"
#include "suffixient/oracle.hpp"

namespace py = pybind11;
using namespace suffixient;

namespace {

// str -> UTF-8 bytes, bytes -> bytes, anything else -> sequence of ints.
std::vector<LetterCode> to_letters(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) {
    const auto s = obj.cast<std::string>();
    return oracle::from_text(s);
  }
  if (py::isinstance<py::bytes>(obj)) return oracle::from_text(obj.cast<std::string>());
  return obj.cast<std::vector<LetterCode>>();
}

std::string to_bytes(const py::object& obj) {
  if (py::isinstance<py::str>(obj) || py::isinstance<py::bytes>(obj)) return obj.cast<std::string>();
  std::string out;
  for (auto x : obj.cast<std::vector<LetterCode>>()) {
    if (x > 255) throw AlphabetError("letter " + std::to_string(x) + " is not a byte");
    out.push_back(static_cast<char>(x));
  }
  return out;
}

Direction parse_direction(const std::string& s) {
  if (s == "ltr") return Direction::kLeftToRight;
  if (s == "rtl") return Direction::kRightToLeft;
  throw UsageError("direction must be 'ltr' or 'rtl'");
}

AlphaEngine parse_engine(const std::string& s) {
  if (s == "fringe") return AlphaEngine::kFringe;
  if (s == "naive-walk") return AlphaEngine::kNaiveWalk;
  throw UsageError("engine must be 'fringe' or 'naive-walk'");
}

Sentinel parse_sentinel(const py::object& obj) {
  if (obj.is_none()) return Sentinel::none();
  if (py::isinstance<py::str>(obj)) {
    const auto s = obj.cast<std::string>();
    if (s == "auto") return Sentinel::automatic();
    if (s.size() == 1) return Sentinel::of(static_cast<std::uint8_t>(s[0]));
  } else if (py::isinstance<py::int_>(obj)) {
    const auto v = obj.cast<int>();
    if (v >= 0 && v <= 255) return Sentinel::of(static_cast<std::uint8_t>(v));
  }
  throw UsageError("sentinel must be 'auto', None, a one-character string or a byte value");
}

py::dict delta_dict(const DeltaReport& d, const WeinerTree& tree) {
  auto entries = [&](const std::vector<SreEntry>& list) {
    py::list out;
    for (const auto& e : list) {
      py::dict item;
      item["u_len"] = tree.node(e.key.node).depth;
      item["x"] = e.key.letter;
      item["position"] = e.position.value;
      out.append(item);
    }
    return out;
  };
  py::dict out;
  out["step"] = d.step;
  out["letter"] = d.letter;
  out["added"] = entries(d.added);
  out["removed"] = entries(d.removed);
  out["chi"] = d.chi;
  out["ops"] = d.cost.total();
  return out;
}

py::list pairs_list(const SrePairs& pairs) {
  py::list out;
  for (const auto& [u, x] : pairs) out.append(py::make_tuple(u, x));
  return out;
}

template <class M>
void bind_maintainer(py::module_& m, const char* name) {
  py::class_<M>(m, name)
      .def(py::init([](std::uint32_t alphabet_size, const std::string& engine) {
             MaintainerOptions o;
             o.alphabet_size = alphabet_size;
             o.engine = parse_engine(engine);
             return M(o);
           }),
           py::arg("alphabet_size") = 256, py::arg("engine") = "fringe")
      .def("feed", [](M& self, LetterCode x) { return delta_dict(self.feed(x), self.tree()); })
      .def("feed_all",
           [](M& self, const py::object& letters) {
             for (auto x : to_letters(letters)) self.feed(x);
           })
      .def_property_readonly("chi", &M::chi)
      .def_property_readonly("chi_trace", &M::chi_trace)
      .def("sss", &M::sss_positions)
      .def("sre_pairs", [](const M& self) { return pairs_list(self.sre_pairs()); });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Online maintenance of supermaximal right-extensions and smallest suffixient sets";

  static py::exception<Error> base(m, "Error");
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<AlphabetError>(m, "AlphabetError", base.ptr());
  py::register_exception<BoundsError>(m, "BoundsError", base.ptr());
  py::register_exception<SizeError>(m, "SizeError", base.ptr());
  py::register_exception<StateError>(m, "StateError", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  bind_maintainer<LtrMaintainer>(m, "LtrMaintainer");
  bind_maintainer<RtlMaintainer>(m, "RtlMaintainer");

  m.def(
      "stream",
      [](const py::object& text, const std::string& direction, const std::string& engine,
         const std::string& emit, const py::object& sentinel) {
        StreamOptions o;
        o.direction = parse_direction(direction);
        o.engine = parse_engine(engine);
        if (emit == "chi") {
          o.emit = EmitMode::kChi;
        } else if (emit == "sss") {
          o.emit = EmitMode::kSss;
        } else if (emit == "deltas") {
          o.emit = EmitMode::kDeltas;
        } else {
          throw UsageError("emit must be 'chi', 'deltas' or 'sss'");
        }
        o.sentinel = parse_sentinel(sentinel);
        std::ostringstream out;
        run_stream(to_bytes(text), o, out);
        return out.str();
      },
      py::arg("text"), py::arg("direction") = "ltr", py::arg("engine") = "fringe",
      py::arg("emit") = "deltas", py::arg("sentinel") = "auto");

  m.def(
      "check",
      [](std::size_t count, std::size_t max_n, std::uint32_t sigma, std::uint64_t seed,
         bool structure) -> py::object {
        VerifyOptions o;
        o.structure = structure;
        const auto cases = fuzz_cases(count, max_n, sigma, seed);
        const auto failure = run_fuzz(cases, o);
        if (!failure) return py::none();
        py::dict out;
        out["direction"] = failure->divergence.direction;
        out["step"] = failure->divergence.step;
        out["what"] = failure->divergence.what;
        out["shrunk"] = failure->shrunk;
        return out;
      },
      py::arg("count"), py::arg("max_n") = 64, py::arg("sigma") = 4, py::arg("seed") = 1,
      py::arg("structure") = false);

  auto o = m.def_submodule("oracle", "Brute-force reference computations");
  o.def("chi", [](const py::object& w) { return oracle::chi(to_letters(w)); });
  o.def("supermaximal_extensions", [](const py::object& w) {
    py::list out;
    for (const auto& e : oracle::supermaximal_extensions(to_letters(w))) {
      out.append(py::make_tuple(e.u, e.x));
    }
    return out;
  });
  o.def("is_suffixient", [](const py::object& w, const std::vector<std::int64_t>& positions) {
    return oracle::is_suffixient(to_letters(w), positions);
  });
  o.def(
      "canonical_sss",
      [](const py::object& w, const std::string& side) {
        if (side != "leftmost" && side != "rightmost") {
          throw UsageError("side must be 'leftmost' or 'rightmost'");
        }
        return oracle::canonical_sss(to_letters(w),
                                     side == "leftmost" ? oracle::Side::kLeftmost : oracle::Side::kRightmost);
      },
      py::arg("w"), py::arg("side") = "leftmost");
  o.def("all_sss", [](const py::object& w) {
    const auto sets = oracle::all_sss(to_letters(w));
    return std::vector<std::vector<std::int64_t>>(sets.begin(), sets.end());
  });

  auto g = m.def_submodule("gen", "Test corpora");
  g.def("fibonacci", &gen::fibonacci, py::arg("n"));
  g.def("de_bruijn", &gen::de_bruijn, py::arg("sigma"), py::arg("order"));
  g.def("random_text", &gen::random_text, py::arg("n"), py::arg("sigma"), py::arg("seed"));
}
