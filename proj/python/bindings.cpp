#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "burgess/arith.hpp"
#include "burgess/cli.hpp"
#include "burgess/coeffs.hpp"
#include "burgess/errors.hpp"
#include "burgess/expsums.hpp"
#include "burgess/lscan.hpp"
#include "burgess/reductions.hpp"
#include "burgess/report_io.hpp"

namespace py = pybind11;
using namespace burgess;

namespace {

py::int_ to_pyint(Int128 v) {
    const std::string s = int128_to_string(v);
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::tuple cli(const std::vector<std::string>& args) {
    std::vector<std::string> full{"burgess"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : full) argv.push_back(a.data());
    std::ostringstream out, err;
    int status;
    {
        py::gil_scoped_release release;
        status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(status, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Character sums, Kloosterman sums and central L-values modulo primes";

    py::register_exception<burgess::Error>(m, "BurgessError", PyExc_ValueError);

    m.def("is_prime", &is_prime);
    m.def("gauss_sum", [](i64 q, i64 chi) { return gauss_sum(build_character(q, chi)).value; },
          py::arg("q"), py::arg("chi"));
    m.def("kloosterman",
          [](i64 a, i64 b, i64 c, std::optional<std::pair<i64, i64>> psi) {
              KloostermanQuery query{a, b, c, std::nullopt};
              if (psi) query.twist = build_character(psi->first, psi->second);
              return kloosterman(query);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("psi") = py::none(),
          "S(a, b; c), optionally twisted by the character (modulus, index).");
    m.def("tau",
          [](i64 n_max) {
              const auto t = compute_tau(n_max);
              py::list out;
              for (i64 n = 1; n <= n_max; ++n) out.append(to_pyint(t[n]));
              return out;
          },
          py::arg("n_max"), "[tau(1), ..., tau(n_max)] as Python ints.");
    m.def("divisor_counts",
          [](i64 n_max) {
              auto d = divisor_counts(n_max);
              return std::vector<i64>(d.begin() + 1, d.end());
          },
          py::arg("n_max"));
    m.def("central_value",
          [](i64 M, i64 chi, const std::string& method, double delta) {
              const auto c = build_character(M, chi);
              if (method == "hurwitz") return central_value_oracle(c).value;
              if (method == "smoothed") return central_value_smoothed(c, delta).value;
              throw py::value_error("method must be 'hurwitz' or 'smoothed'");
          },
          py::arg("M"), py::arg("chi"), py::arg("method") = "hurwitz", py::arg("delta") = 1.0);
    m.def("offdiag_tail", &offdiag_tail, py::arg("p"), py::arg("M"), py::arg("L"), py::arg("N"),
          py::arg("c_max") = 1000, py::arg("k") = 11);
    m.def("verify",
          [](int tuples, u64 seed) {
              std::vector<VerificationReport> reports;
              {
                  py::gil_scoped_release release;
                  reports = run_all_suites(tuples, seed, 1);
              }
              std::vector<std::string> lines;
              for (const auto& r : reports) lines.push_back(to_json(r).dump());
              return lines;
          },
          py::arg("tuples") = 100, py::arg("seed") = 0,
          "Runs every identity suite; one JSON line per tuple.");
    m.def("cli", &cli, py::arg("args"), "Runs the command-line tool in-process; returns (status, stdout, stderr).");
}
