#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coremotz/abacus.hpp"
#include "coremotz/bijections.hpp"
#include "coremotz/cli.hpp"
#include "coremotz/counting.hpp"
#include "coremotz/oracle.hpp"
#include "coremotz/partition.hpp"
#include "coremotz/paths.hpp"

#include <sstream>

namespace py = pybind11;
using namespace coremotz;

namespace {

// cpp_int has no pybind11 caster; go through the decimal string.
py::int_ to_py(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& partitions) {
  std::vector<std::vector<int>> out;
  out.reserve(partitions.size());
  for (const auto& lambda : partitions) out.push_back(lambda.parts());
  return out;
}

template <typename Paths>
std::vector<std::string> words_of(const Paths& paths) {
  std::vector<std::string> out;
  out.reserve(paths.size());
  for (const auto& w : paths) out.push_back(w.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simultaneous core partitions, rational Motzkin paths and their exact counts";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ExactnessError>(m, "ExactnessError", PyExc_ArithmeticError);

  // partitions
  m.def("hook_lengths", [](const std::vector<int>& parts) { return hook_lengths(Partition(parts)); }, py::arg("partition"));
  m.def("conjugate", [](const std::vector<int>& parts) { return conjugate(Partition(parts)).parts(); },
        py::arg("partition"));
  m.def("beta_set", [](const std::vector<int>& parts) { return beta_set(Partition(parts)).elements(); },
        py::arg("partition"));
  m.def("partition_from_beta", [](const std::vector<int>& beta) { return partition_from_beta(BetaSet(beta)).parts(); },
        py::arg("beta"));
  m.def("is_t_core", [](const std::vector<int>& parts, int t) { return is_t_core(Partition(parts), t); },
        py::arg("partition"), py::arg("t"));
  m.def("is_simultaneous_core",
        [](const std::vector<int>& parts, const std::vector<int>& ts) { return is_simultaneous_core(Partition(parts), ts); },
        py::arg("partition"), py::arg("moduli"));
  m.def("corner_count", [](const std::vector<int>& parts) { return corner_count(Partition(parts)); },
        py::arg("partition"));

  // abacus
  m.def("boundary_profile",
        [](const std::vector<int>& parts, int s, int d) { return boundary_profile(Partition(parts), s, d).values; },
        py::arg("partition"), py::arg("s"), py::arg("d"));
  m.def("render_abacus",
        [](const std::vector<int>& parts, int s, int d, int lo, int hi) {
          return render_abacus(Partition(parts), s, d, lo, hi);
        },
        py::arg("partition"), py::arg("s"), py::arg("d"), py::arg("row_lo"), py::arg("row_hi"));

  // paths
  m.def("label_vector", [](const std::string& w, int s, int d) { return label_vector(StepWord::parse(w), s, d); },
        py::arg("path"), py::arg("s"), py::arg("d"));
  m.def("is_rational", [](const std::string& w, int s, int d) { return is_rational(StepWord::parse(w), s, d); },
        py::arg("path"), py::arg("s"), py::arg("d"));
  m.def("canonicalize",
        [](const std::string& w, int s, int d) {
          const auto c = canonicalize(StepWord::parse(w), s, d);
          return py::make_tuple(c.shift, c.path.to_string());
        },
        py::arg("path"), py::arg("s"), py::arg("d"));
  m.def("enumerate_rational_motzkin", [](int s, int d, int p) { return words_of(enumerate_rational_motzkin(s, d, p)); },
        py::arg("s"), py::arg("d"), py::arg("p"));
  m.def("enumerate_gen_dyck", [](int s, int p) { return words_of(enumerate_gen_dyck(s, p)); }, py::arg("s"),
        py::arg("p"));

  // bijections
  m.def("core_to_path",
        [](const std::vector<int>& parts, int s, int d, int p) {
          return core_to_path(Partition(parts), CoreFamily::make(s, d, p)).to_string();
        },
        py::arg("partition"), py::arg("s"), py::arg("d"), py::arg("p"));
  m.def("path_to_core",
        [](const std::string& w, int s, int d, int p) {
          return path_to_core(StepWord::parse(w), CoreFamily::make(s, d, p)).parts();
        },
        py::arg("path"), py::arg("s"), py::arg("d"), py::arg("p"));
  m.def("phi", [](const std::string& w, int p) { return phi(StepWord::parse(w), p).to_string(); }, py::arg("path"),
        py::arg("p"));
  m.def("phi_inverse", [](const std::string& q, int p) { return phi_inverse(GenDyckPath::parse(q, p)).to_string(); },
        py::arg("path"), py::arg("p"));

  // exact counts
  m.def("count_anderson", [](int s, int t) { return to_py(count_anderson(s, t)); }, py::arg("s"), py::arg("t"));
  m.def("count_main", [](int s, int d, int p) { return to_py(count_main(s, d, p)); }, py::arg("s"), py::arg("d"),
        py::arg("p"));
  m.def("count_mainprop", [](int s, int d, int p, int k) { return to_py(count_mainprop(s, d, p, k)); }, py::arg("s"),
        py::arg("d"), py::arg("p"), py::arg("k"));
  m.def("count_freemotz", [](int s, int d, int k) { return to_py(count_freemotz(s, d, k)); }, py::arg("s"),
        py::arg("d"), py::arg("k"));
  m.def("count_corone", [](int s, int p) { return to_py(count_corone(s, p)); }, py::arg("s"), py::arg("p"));
  m.def("count_corners", [](int s, int p, int k) { return to_py(count_corners(s, p, k)); }, py::arg("s"),
        py::arg("p"), py::arg("k"));
  m.def("count_sc_fms", [](int s, int t) { return to_py(count_sc_fms(s, t)); }, py::arg("s"), py::arg("t"));
  m.def("count_sc_main", [](int s, int p) { return to_py(count_sc_main(s, p)); }, py::arg("s"), py::arg("p"));
  m.def("count_sym_dyck", [](long k, long l) { return to_py(count_sym_dyck(k, l)); }, py::arg("k"), py::arg("l"));
  m.def("gen_dyck_count", [](int s, int p) { return to_py(gen_dyck_count_recurrence(s, p)); }, py::arg("s"),
        py::arg("p"));

  // brute force
  m.def("enumerate_cores", [](const std::vector<int>& ts) { return parts_of(oracle::enumerate_cores(ts)); },
        py::arg("moduli"));
  m.def("enumerate_sc_cores", [](const std::vector<int>& ts) { return parts_of(oracle::enumerate_sc_cores(ts)); },
        py::arg("moduli"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr).");
}
