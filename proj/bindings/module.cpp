#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bqokit/block_array.hpp"
#include "bqokit/errors.hpp"
#include "bqokit/family.hpp"
#include "bqokit/pouzet.hpp"
#include "bqokit/reduction.hpp"
#include "bqokit/seq.hpp"

namespace py = pybind11;
using namespace bqokit;

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite-window shift calculus: smoothing, order refinement, carrier reduction";

  py::register_exception<SchemaError>(m, "SchemaError");
  py::register_exception<InsufficientPrefix>(m, "InsufficientPrefix");
  py::register_exception<WindowExhaustion>(m, "WindowExhaustion");
  py::register_exception<PreconditionError>(m, "PreconditionError");
  py::register_exception<InvalidRelation>(m, "InvalidRelation");

  py::class_<FinSeq>(m, "FinSeq")
      .def(py::init<>())
      .def(py::init<std::vector<Nat>>(), py::arg("entries"))
      .def("__len__", &FinSeq::lh)
      .def("__getitem__",
           [](const FinSeq& s, std::size_t i) {
             if (i >= s.lh()) throw py::index_error();
             return s[i];
           })
      .def("__repr__", &FinSeq::str)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const FinSeq& s) {
             std::size_t h = s.lh();
             for (Nat v : s.entries()) h = h * 1000003 + v;
             return h;
           })
      .def_property_readonly("entries", &FinSeq::entries);

  py::class_<FreeSeq>(m, "FreeSeq")
      .def(py::init<>())
      .def(py::init<std::vector<Nat>>(), py::arg("entries"))
      .def("__len__", &FreeSeq::lh)
      .def("__getitem__",
           [](const FreeSeq& s, std::size_t i) {
             if (i >= s.lh()) throw py::index_error();
             return s[i];
           })
      .def("__repr__", &FreeSeq::str)
      .def(py::self == py::self)
      .def("is_binary", &FreeSeq::is_binary)
      .def_property_readonly("entries", &FreeSeq::entries);

  m.def("length_lex_less",
        py::overload_cast<const FinSeq&, const FinSeq&>(&length_lex_less), py::arg("a"),
        py::arg("b"));
  m.def("is_prefix", py::overload_cast<const FinSeq&, const FinSeq&>(&is_prefix), py::arg("s"),
        py::arg("t"));
  m.def("prefix", py::overload_cast<const FinSeq&, std::size_t>(&prefix), py::arg("s"),
        py::arg("i"));
  m.def("concat", &concat, py::arg("s"), py::arg("t"));
  m.def("dominated_below", &dominated_below, py::arg("s"));
  m.def("shift_rel", &shift_rel, py::arg("s"), py::arg("t"),
        "s is shift-below t: some increasing u extends s and, without its least entry, extends t");

  py::class_<Window>(m, "Window")
      .def(py::init([](Nat n, Nat l) { return Window{n, l}; }), py::arg("n"), py::arg("l"))
      .def_readonly("n", &Window::base_bound)
      .def_readonly("l", &Window::length_bound)
      .def(py::self == py::self);

  py::class_<SeqFamily>(m, "SeqFamily")
      .def(py::init<Window, std::vector<FinSeq>>(), py::arg("window"), py::arg("members"))
      .def_property_readonly("window", &SeqFamily::window)
      .def_property_readonly("members", &SeqFamily::members)
      .def("__len__", &SeqFamily::size)
      .def("__contains__", py::overload_cast<const FinSeq&>(&SeqFamily::contains, py::const_))
      .def("max_length", &SeqFamily::max_length)
      .def(py::self == py::self);

  py::class_<SmoothViolation>(m, "SmoothViolation")
      .def_readonly("s", &SmoothViolation::s)
      .def_readonly("t", &SmoothViolation::t);

  m.def("base", &base, py::arg("family"));
  m.def("smooth_check", &smooth_check, py::arg("family"),
        "first violating pair, or None when the family is smooth");
  m.def("avoid_tree_contains", &avoid_tree_contains, py::arg("family"), py::arg("s"));
  m.def("star_tree_contains", &star_tree_contains, py::arg("family"), py::arg("s"));
  m.def("star_contains", &star_contains, py::arg("family"), py::arg("s"));
  m.def("star", &star, py::arg("family"));
  m.def("extend_into_star", &extend_into_star, py::arg("family"), py::arg("t"));

  py::enum_<BlockStatus>(m, "BlockStatus")
      .value("BLOCK_IN_WINDOW", BlockStatus::BlockInWindow)
      .value("NOT_BLOCK", BlockStatus::NotBlock)
      .value("INDETERMINATE_AT_BOUNDARY", BlockStatus::IndeterminateAtBoundary);

  py::class_<BlockVerdict>(m, "BlockVerdict")
      .def_readonly("status", &BlockVerdict::status)
      .def_readonly("witness", &BlockVerdict::witness);

  m.def("block_check", &block_check, py::arg("family"));

  py::class_<RelationMatrix>(m, "RelationMatrix")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def("__len__", &RelationMatrix::size)
      .def("at", &RelationMatrix::at, py::arg("i"), py::arg("j"))
      .def("set", &RelationMatrix::set, py::arg("i"), py::arg("j"), py::arg("v"))
      .def("reflexive", &RelationMatrix::reflexive)
      .def_static("identity", &RelationMatrix::identity, py::arg("n"))
      .def_static("all_true", &RelationMatrix::all_true, py::arg("n"))
      .def(py::self == py::self);

  py::enum_<OrderAxiomViolation::Kind>(m, "AxiomKind")
      .value("REFLEXIVITY", OrderAxiomViolation::Kind::Reflexivity)
      .value("ANTISYMMETRY", OrderAxiomViolation::Kind::Antisymmetry)
      .value("TRANSITIVITY", OrderAxiomViolation::Kind::Transitivity);

  py::class_<OrderAxiomViolation>(m, "OrderAxiomViolation")
      .def_readonly("kind", &OrderAxiomViolation::kind)
      .def_readonly("i", &OrderAxiomViolation::i)
      .def_readonly("j", &OrderAxiomViolation::j)
      .def_readonly("k", &OrderAxiomViolation::k);

  m.def("pouzet_order", &pouzet_order, py::arg("r"));
  m.def("order_axiom_violation", &order_axiom_violation, py::arg("m"));
  m.def("contained_in", &contained_in, py::arg("m"), py::arg("r"));
  m.def("enumeration_compatible", &enumeration_compatible, py::arg("m"));

  py::class_<BlockArray>(m, "BlockArray")
      .def_static("with_indices", &BlockArray::with_indices, py::arg("family"),
                  py::arg("assignments"))
      .def_static("with_seqs", &BlockArray::with_seqs, py::arg("family"), py::arg("assignments"))
      .def_property_readonly("family", &BlockArray::family)
      .def("index_valued", &BlockArray::index_valued)
      .def("index_at", &BlockArray::index_at, py::arg("member"))
      .def("seq_at", &BlockArray::seq_at, py::arg("member"));

  m.def("find_good_pair", &find_good_pair, py::arg("array"), py::arg("r"));
  m.def("perfect_check",
        py::overload_cast<const BlockArray&, const RelationMatrix&>(&perfect_check),
        py::arg("array"), py::arg("r"));
  m.def("perfect_check", py::overload_cast<const BlockArray&>(&perfect_check), py::arg("array"));

  py::enum_<ValueBoundsReport::Status>(m, "ValueBoundsStatus")
      .value("OK", ValueBoundsReport::Status::Ok)
      .value("FAMILY_NOT_SMOOTH", ValueBoundsReport::Status::FamilyNotSmooth)
      .value("ARRAY_NOT_PERFECT", ValueBoundsReport::Status::ArrayNotPerfect)
      .value("LENGTH_BOUND_FAILED", ValueBoundsReport::Status::LengthBoundFailed)
      .value("DOMINATION_FAILED", ValueBoundsReport::Status::DominationFailed);

  py::class_<ValueBoundsReport>(m, "ValueBoundsReport")
      .def_readonly("status", &ValueBoundsReport::status)
      .def_readonly("pair_witness", &ValueBoundsReport::pair_witness)
      .def_readonly("member", &ValueBoundsReport::member);

  m.def("value_bounds_check", &value_bounds_check, py::arg("codomain"), py::arg("array"));
  m.def("value_bounds_conclusions", &value_bounds_conclusions, py::arg("array"));

  py::class_<SigmaTriple>(m, "SigmaTriple")
      .def(py::init([](FreeSeq xs, FreeSeq ys, FinSeq s) {
             return SigmaTriple{std::move(xs), std::move(ys), std::move(s)};
           }),
           py::arg("xs"), py::arg("ys"), py::arg("s"))
      .def_readonly("xs", &SigmaTriple::xs)
      .def_readonly("ys", &SigmaTriple::ys)
      .def_readonly("s", &SigmaTriple::s)
      .def(py::self == py::self);

  py::class_<SigmaCode>(m, "SigmaCode")
      .def(py::init<Window, std::vector<SigmaTriple>>(), py::arg("window"), py::arg("triples"))
      .def_property_readonly("window", &SigmaCode::window)
      .def_property_readonly("triples", &SigmaCode::triples)
      .def("__len__", &SigmaCode::size)
      .def("max_triple_length", &SigmaCode::max_triple_length)
      .def(py::self == py::self);

  py::class_<QPair>(m, "QPair")
      .def(py::init([](FreeSeq sigma, FinSeq s) { return QPair{std::move(sigma), std::move(s)}; }),
           py::arg("sigma"), py::arg("s"))
      .def_readonly("sigma", &QPair::sigma)
      .def_readonly("s", &QPair::s)
      .def(py::self == py::self);

  m.def("rx", &rx, py::arg("p"), py::arg("q"),
        "p related to q unless sigma(p) is an initial segment of sigma(q) and s(p) is "
        "shift-below s(q)");
  m.def("code_slice", &code_slice, py::arg("code"), py::arg("x"));
  m.def("covered", &covered, py::arg("code"), py::arg("x"), py::arg("sigma"), py::arg("s"));
  m.def("minimally_covered", &minimally_covered, py::arg("code"), py::arg("x"), py::arg("sigma"),
        py::arg("s"));

  py::class_<ReducedRelation>(m, "ReducedRelation")
      .def(py::init<std::vector<QPair>>(), py::arg("carrier"))
      .def_property_readonly("carrier", &ReducedRelation::carrier)
      .def("__len__", &ReducedRelation::size)
      .def("relates", &ReducedRelation::relates, py::arg("i"), py::arg("j"));

  m.def("enumerate_carrier", &enumerate_carrier, py::arg("code"), py::arg("x"));
  m.def("family_slice", &family_slice, py::arg("code"), py::arg("x"), py::arg("y"));

  py::class_<CarrierStarReport>(m, "CarrierStarReport")
      .def_readonly("ok", &CarrierStarReport::ok)
      .def_readonly("witness", &CarrierStarReport::witness)
      .def_readonly("carrier_side", &CarrierStarReport::carrier_side)
      .def_readonly("star_side", &CarrierStarReport::star_side);

  m.def("carrier_star_check", &carrier_star_check, py::arg("code"), py::arg("x"), py::arg("y"),
        "windowed equivalence between minimal coveredness along y and membership in the "
        "smoothing of the y-slice");

  py::class_<BadArrayReport>(m, "BadArrayReport")
      .def_readonly("family", &BadArrayReport::family)
      .def_readonly("pairs_checked", &BadArrayReport::pairs_checked)
      .def_readonly("shift_pairs", &BadArrayReport::shift_pairs)
      .def_readonly("good_pair", &BadArrayReport::good_pair);

  m.def("bad_array_witness", &bad_array_witness, py::arg("code"), py::arg("x"), py::arg("y"));
}
