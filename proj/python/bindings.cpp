#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hyperoct/attacks.hpp"
#include "hyperoct/basegen.hpp"
#include "hyperoct/bench.hpp"
#include "hyperoct/codec.hpp"
#include "hyperoct/crypto.hpp"

namespace py = pybind11;
using namespace hyperoct;

namespace pybind11::detail {

// mpz <-> python int, routed through decimal strings
template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    try {
      value = BigInt(std::string(py::str(src)));
    } catch (const std::invalid_argument&) {
      return false;
    }
    return true;
  }

  static handle cast(const BigInt& src, return_value_policy, handle) {
    return handle(PyLong_FromString(src.get_str().c_str(), nullptr, 10));
  }
};

}  // namespace pybind11::detail

namespace {

std::vector<std::uint8_t> to_byte_vector(const py::bytes& data) {
  const std::string raw = data;
  return {raw.begin(), raw.end()};
}

py::bytes to_py_bytes(const std::vector<std::uint8_t>& data) {
  return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

template <class Oracle>
py::class_<Oracle> bind_oracle(py::module_& m, const char* name) {
  return py::class_<Oracle>(m, name)
      .def("identity", &Oracle::identity)
      .def("op", &Oracle::op)
      .def("pow", &Oracle::pow)
      .def("eq", &Oracle::eq)
      .def("generator", &Oracle::generator)
      .def("generator_order", &Oracle::generator_order)
      .def("order_factors", &Oracle::order_factors)
      .def("op_count", &Oracle::op_count)
      .def("reset_op_count", &Oracle::reset_op_count);
}

template <class Result>
void bind_dlp_result_fields(py::class_<Result>& cls) {
  cls.def_readonly("found", &Result::found)
      .def_readonly("x", &Result::x)
      .def_readonly("search_ops", &Result::search_ops)
      .def_readonly("total_ops", &Result::total_ops);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "signed-permutation group arithmetic, integer codec, discrete-log "
            "protocols and attack suite";

  // exception mapping: argument-shaped errors become ValueError
  static py::exception<Error> base_error(m, "HyperoctError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      base_error(e.what());
    }
  });

  py::class_<Rng>(m, "Rng", "seedable deterministic randomness source")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next_u64", &Rng::next_u64)
      .def("coin", &Rng::coin)
      .def("below", py::overload_cast<const BigInt&>(&Rng::below), py::arg("bound"));

  py::class_<SignedCycle>(m, "SignedCycle")
      .def_readonly("support", &SignedCycle::support)
      .def_readonly("signs", &SignedCycle::signs)
      .def("sign", &SignedCycle::sign)
      .def("element_order", &SignedCycle::element_order)
      .def("__len__", [](const SignedCycle& c) { return c.length(); })
      .def("__repr__", [](const SignedCycle& c) {
        std::string out = "SignedCycle(";
        for (std::size_t i = 0; i < c.support.size(); ++i) {
          if (i) out += " ";
          out += std::to_string(c.signs[i] < 0 ? -c.support[(i + 1) % c.support.size()]
                                                : c.support[(i + 1) % c.support.size()]);
        }
        return out + ")";
      });

  py::class_<SignedPermutation>(m, "SignedPermutation",
                                "element of B_n in window notation; a * b applies a first")
      .def(py::init([](const std::vector<std::int32_t>& window) {
             return SignedPermutation::from_window(window);
           }),
           py::arg("window"))
      .def_static("identity", &SignedPermutation::identity, py::arg("n"))
      .def_property_readonly("rank", &SignedPermutation::rank)
      .def_property_readonly("window",
                             [](const SignedPermutation& p) { return p.window(); })
      .def("image", &SignedPermutation::image, py::arg("i"))
      .def("is_identity", &SignedPermutation::is_identity)
      .def("inverse", [](const SignedPermutation& p) { return inverse(p); })
      .def("power", [](const SignedPermutation& p, const BigInt& e) { return power(p, e); },
           py::arg("e"))
      .def("order", [](const SignedPermutation& p) { return order(p); })
      .def("cycles", [](const SignedPermutation& p) { return cycle_decompose(p); })
      .def("__mul__",
           [](const SignedPermutation& a, const SignedPermutation& b) { return compose(a, b); })
      .def(py::self == py::self)
      .def("__hash__",
           [](const SignedPermutation& p) { return py::hash(py::str(to_string(p))); })
      .def("__str__", [](const SignedPermutation& p) { return to_string(p); })
      .def("__repr__",
           [](const SignedPermutation& p) { return "SignedPermutation(" + to_string(p) + ")"; });

  m.def("identity", &SignedPermutation::identity, py::arg("n"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"), "b after a (a acts first)");
  m.def("inverse", &inverse);
  m.def("power", &power, py::arg("a"), py::arg("e"));
  m.def("cycle_decompose", &cycle_decompose);
  m.def("recompose", &recompose, py::arg("n"), py::arg("cycles"));
  m.def("order", &order);
  m.def("random_element", &random_element, py::arg("n"), py::arg("rng"));
  m.def("group_cardinality", &group_cardinality, py::arg("n"), "2^n * n!");
  m.def("parse_window",
        [](const std::string& text) { return SignedPermutation::from_window(parse_window(text)); },
        py::arg("text"));

  // codec
  m.def("int_to_digits",
        [](const BigInt& value) { return int_to_digits(value).digits; },
        py::arg("value"), "little-endian digits, place value 2^i * i!");
  m.def("digits_to_int",
        [](const std::vector<std::uint64_t>& digits) {
          return digits_to_int(HyperoctDigits::from_digits(digits));
        },
        py::arg("digits"));
  m.def("digits_to_string",
        [](const std::vector<std::uint64_t>& digits) {
          return digits_to_string(HyperoctDigits::from_digits(digits));
        },
        py::arg("digits"));
  m.def("digits_from_string",
        [](const std::string& text) { return digits_from_string(text).digits; }, py::arg("text"));
  m.def("subexceedant_to_perm",
        [](const std::vector<std::int32_t>& word) {
          return subexceedant_to_perm(SubexceedantFunction::from_word(word));
        },
        py::arg("word"));
  m.def("perm_to_subexceedant",
        [](const SignedPermutation& sigma) { return perm_to_subexceedant(sigma).f; },
        py::arg("sigma"));
  m.def("int_to_signed_perm", &int_to_signed_perm, py::arg("value"), py::arg("n"));
  m.def("signed_perm_to_int", &signed_perm_to_int, py::arg("pi"));
  m.def("block_size_for_rank", &block_size_for_rank, py::arg("n"));
  m.def("bytes_to_units",
        [](const py::bytes& data, int n) { return bytes_to_units(to_byte_vector(data), n); },
        py::arg("data"), py::arg("n"));
  m.def("units_to_bytes",
        [](const std::vector<SignedPermutation>& units, int n) {
          return to_py_bytes(units_to_bytes(units, n));
        },
        py::arg("units"), py::arg("n"));

  // protocols
  py::class_<PublicParams>(m, "PublicParams")
      .def(py::init([](const SignedPermutation& beta) { return PublicParams::create(beta); }),
           py::arg("beta"))
      .def_readonly("n", &PublicParams::n)
      .def_readonly("beta", &PublicParams::beta)
      .def_readonly("beta_order", &PublicParams::beta_order)
      .def_readonly("order_factors", &PublicParams::order_factors);

  py::enum_<SecretBound>(m, "SecretBound")
      .value("element_order", SecretBound::element_order)
      .value("group_cardinality", SecretBound::group_cardinality);

  py::class_<KeyPair>(m, "KeyPair")
      .def_readonly("secret", &KeyPair::secret)
      .def_readonly("public_point", &KeyPair::public_point);

  m.def("keygen", &keygen, py::arg("params"), py::arg("rng"),
        py::arg("bound") = SecretBound::element_order);
  m.def("dh_shared", &dh_shared, py::arg("own"), py::arg("other_public"));

  py::class_<ElGamalCiphertext>(m, "ElGamalCiphertext")
      .def_readonly("m1", &ElGamalCiphertext::m1)
      .def_readonly("m2", &ElGamalCiphertext::m2);

  m.def("elgamal_encrypt", &elgamal_encrypt, py::arg("mu"), py::arg("recipient_public"),
        py::arg("params"), py::arg("rng"));
  m.def("elgamal_decrypt", &elgamal_decrypt, py::arg("ct"), py::arg("own"));

  py::class_<MasseyOmuraKey>(m, "MasseyOmuraKey")
      .def_readonly("c", &MasseyOmuraKey::c)
      .def_readonly("c_inv", &MasseyOmuraKey::c_inv)
      .def_readonly("modulus", &MasseyOmuraKey::modulus);

  py::class_<MoTranscript>(m, "MoTranscript")
      .def_readonly("pass1", &MoTranscript::pass1)
      .def_readonly("pass2", &MoTranscript::pass2)
      .def_readonly("pass3", &MoTranscript::pass3)
      .def_readonly("recovered", &MoTranscript::recovered);

  m.def("mo_keygen", &mo_keygen, py::arg("n"), py::arg("rng"));
  m.def("mo_pass", &mo_pass, py::arg("x"), py::arg("e"));
  m.def("mo_session", &mo_session, py::arg("mu"), py::arg("alice"), py::arg("bob"));

  // base construction
  py::class_<BaseSpec>(m, "BaseSpec")
      .def(py::init([](int n, std::uint64_t p, std::vector<std::uint64_t> lengths,
                       std::optional<std::vector<int>> signs) {
             return BaseSpec{n, p, std::move(lengths), std::move(signs)};
           }),
           py::arg("n"), py::arg("p"), py::arg("lengths") = std::vector<std::uint64_t>{},
           py::arg("signs") = std::nullopt)
      .def_readwrite("n", &BaseSpec::n)
      .def_readwrite("p", &BaseSpec::p)
      .def_readwrite("lengths", &BaseSpec::lengths)
      .def_readwrite("signs", &BaseSpec::signs);

  m.def("parse_base_spec", &parse_base_spec, py::arg("text"));
  m.def("construct_base", &construct_base, py::arg("spec"), py::arg("rng"));
  m.def("is_prime", &is_prime, py::arg("p"));
  m.def("is_b_smooth", &is_b_smooth, py::arg("value"), py::arg("bound"));
  m.def("factor_order", &factor_order, py::arg("pi"));
  m.def("max_achievable_order", &max_achievable_order, py::arg("n"));

  // attacks
  py::class_<PhSubproblem>(m, "PhSubproblem")
      .def_readonly("prime", &PhSubproblem::prime)
      .def_readonly("exponent", &PhSubproblem::exponent)
      .def_readonly("search_ops", &PhSubproblem::search_ops);

  auto dlp_result = py::class_<DlpResult>(m, "DlpResult");
  bind_dlp_result_fields(dlp_result);
  auto ph_result = py::class_<PhResult>(m, "PhResult");
  bind_dlp_result_fields(ph_result);
  ph_result.def_readonly("subproblems", &PhResult::subproblems);

  bind_oracle<PermGroupOracle>(m, "PermGroupOracle")
      .def(py::init<SignedPermutation>(), py::arg("generator"));
  bind_oracle<ModGroupOracle>(m, "ModGroupOracle")
      .def(py::init<BigInt, BigInt>(), py::arg("modulus"), py::arg("generator"))
      .def(py::init<BigInt, BigInt, BigInt, Factorization>(), py::arg("modulus"),
           py::arg("generator"), py::arg("order"), py::arg("factors"));

  m.def("crt_combine", &crt_combine, py::arg("residues"));
  m.def("dlp_bruteforce", &dlp_bruteforce<PermGroupOracle>, py::arg("group"), py::arg("y"),
        py::arg("bound"));
  m.def("dlp_bruteforce", &dlp_bruteforce<ModGroupOracle>, py::arg("group"), py::arg("y"),
        py::arg("bound"));
  m.def("bsgs", &bsgs<PermGroupOracle>, py::arg("group"), py::arg("y"));
  m.def("bsgs", &bsgs<ModGroupOracle>, py::arg("group"), py::arg("y"));
  m.def("pohlig_hellman", &pohlig_hellman<PermGroupOracle>, py::arg("group"), py::arg("y"));
  m.def("pohlig_hellman", &pohlig_hellman<ModGroupOracle>, py::arg("group"), py::arg("y"));

  // benchmark
  py::class_<ComposeTiming>(m, "ComposeTiming")
      .def_readonly("n", &ComposeTiming::n)
      .def_readonly("reps", &ComposeTiming::reps)
      .def_readonly("seconds_per_compose", &ComposeTiming::seconds_per_compose);
  m.def("bench_compose", &bench_compose, py::arg("n"), py::arg("reps"), py::arg("rng"));

#ifdef VERSION_INFO
#define HYPEROCT_STR_INNER(x) #x
#define HYPEROCT_STR(x) HYPEROCT_STR_INNER(x)
  m.attr("__version__") = HYPEROCT_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
