#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aqmet/cli.hpp"
#include "aqmet/constants.hpp"
#include "aqmet/io.hpp"
#include "aqmet/metrology.hpp"
#include "aqmet/noise.hpp"

namespace py = pybind11;
using namespace aqmet;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Adiabatic ground-state metrology on a perturbed two-spin "
            "Ising model";

  // ---- model ----
  py::class_<FieldConfig>(m, "FieldConfig")
      .def(py::init<double, double, double>(), py::arg("bz0"), py::arg("bzf"),
           py::arg("bx"))
      .def_readwrite("bz0", &FieldConfig::bz0)
      .def_readwrite("bzf", &FieldConfig::bzf)
      .def_readwrite("bx", &FieldConfig::bx);

  m.def("build_ising", &build_ising, py::arg("bz"));
  m.def("build_perturbed", &build_perturbed, py::arg("bz"), py::arg("bx"));
  m.def("build_adiabatic", &build_adiabatic, py::arg("a"), py::arg("cfg"));
  m.def("effective_hamiltonian", &effective_hamiltonian, py::arg("bz"),
        py::arg("bx"));
  m.def("gap", &gap, py::arg("a"), py::arg("cfg"));
  m.def("mixing_angle", &mixing_angle, py::arg("bz"), py::arg("bx"));
  m.def("analytic_ground_state", &analytic_ground_state, py::arg("bz"),
        py::arg("bx"));
  m.def("eigenbasis_states", &eigenbasis_states, py::arg("bz"), py::arg("bx"));

  // ---- linalg ----
  m.def(
      "herm_eig",
      [](const Matrix& h) {
        EigenSystem sys = herm_eig(h);
        return py::make_tuple(sys.values, sys.vectors);
      },
      py::arg("h"), "Eigenvalues (ascending) and eigenvector columns");
  m.def("expm_unitary", &expm_unitary, py::arg("h"), py::arg("t"));
  m.def("overlap_fidelity", &overlap_fidelity, py::arg("r1"), py::arg("r2"));

  // ---- schedule ----
  py::enum_<ScheduleMethod>(m, "ScheduleMethod")
      .value("linear", ScheduleMethod::linear)
      .value("local", ScheduleMethod::local)
      .value("greedy", ScheduleMethod::greedy);

  py::class_<Schedule>(m, "Schedule")
      .def_readonly("s", &Schedule::s)
      .def_readonly("a", &Schedule::a)
      .def_readonly("total_time", &Schedule::total_time)
      .def_readonly("method", &Schedule::method);

  py::class_<GreedyParams>(m, "GreedyParams")
      .def(py::init<>())
      .def(py::init([](double delta_a, double delta_t, double p_c) {
             return GreedyParams{delta_a, delta_t, p_c};
           }),
           py::arg("delta_a") = 1e-3, py::arg("delta_t") = 0.36,
           py::arg("p_c") = 0.9999)
      .def_readwrite("delta_a", &GreedyParams::delta_a)
      .def_readwrite("delta_t", &GreedyParams::delta_t)
      .def_readwrite("p_c", &GreedyParams::p_c);

  py::class_<SegmentPlan>(m, "SegmentPlan")
      .def_readonly("delta_t", &SegmentPlan::delta_t)
      .def_readonly("bz_list", &SegmentPlan::bz_list)
      .def_readonly("bx", &SegmentPlan::bx)
      .def_property_readonly("m_plus_1", &SegmentPlan::segments)
      .def_property_readonly("total_time", &SegmentPlan::total_time);

  m.def("linear_schedule", &linear_schedule, py::arg("n"),
        py::arg("total_time"));
  m.def("local_c", &local_c, py::arg("cfg"));
  m.def("local_schedule", &local_schedule, py::arg("cfg"),
        py::arg("n") = 1024);
  m.def("greedy_schedule", &greedy_schedule, py::arg("cfg"),
        py::arg("params"));
  m.def("time_bound_linear", &time_bound_linear, py::arg("cfg"));
  m.def("time_bound_local", &time_bound_local, py::arg("cfg"));
  m.def("schedule_value", &schedule_value, py::arg("schedule"), py::arg("s"));
  m.def("segment_plan", &segment_plan, py::arg("schedule"), py::arg("cfg"),
        py::arg("m_plus_1"), py::arg("delta_t"));

  // ---- evolve ----
  py::class_<TraceStep>(m, "TraceStep")
      .def_readonly("index", &TraceStep::index)
      .def_readonly("state", &TraceStep::state)
      .def_readonly("ground_fidelity", &TraceStep::ground_fidelity);

  py::class_<EvolutionTrace>(m, "EvolutionTrace")
      .def_readonly("steps", &EvolutionTrace::steps)
      .def_readonly("final_state", &EvolutionTrace::final_state)
      .def_readonly("average_fidelity", &EvolutionTrace::average_fidelity)
      .def_property_readonly("ground_fidelities", [](const EvolutionTrace& t) {
        std::vector<double> f;
        for (const auto& s : t.steps) f.push_back(s.ground_fidelity);
        return f;
      });

  py::class_<RelaxationParams>(m, "RelaxationParams")
      .def(py::init([](std::array<double, 2> t1, std::array<double, 2> t2) {
             return RelaxationParams{t1, t2};
           }),
           py::arg("t1"), py::arg("t2"))
      .def_readwrite("t1", &RelaxationParams::t1)
      .def_readwrite("t2", &RelaxationParams::t2);

  m.def("run_exact", &run_exact, py::arg("plan"), py::arg("initial"));
  m.def("run_trotter", &run_trotter, py::arg("plan"), py::arg("initial"));
  m.def("segment_gate_fidelity", &segment_gate_fidelity, py::arg("i"),
        py::arg("plan"));
  m.def("run_with_relaxation", &run_with_relaxation, py::arg("plan"),
        py::arg("initial"), py::arg("relax"), py::arg("substeps") = 32);
  m.def("optimize_step_count", &optimize_step_count, py::arg("cfg"),
        py::arg("schedule"), py::arg("relax"), py::arg("m_candidates"));
  m.def("seconds_to_sim", &seconds_to_sim, py::arg("seconds"),
        py::arg("j_hz") = kCouplingHz);

  // ---- metrology ----
  py::class_<MeasurementBasis>(m, "MeasurementBasis")
      .def_readonly("bz_hat", &MeasurementBasis::bz_hat)
      .def_readonly("bx", &MeasurementBasis::bx)
      .def_readonly("vectors", &MeasurementBasis::vectors)
      .def_readonly("eigenvalues", &MeasurementBasis::eigenvalues);

  py::class_<Rotation>(m, "Rotation")
      .def_readonly("spin", &Rotation::spin)
      .def_readonly("axis", &Rotation::axis)
      .def_readonly("angle", &Rotation::angle);

  py::class_<ZzCoupling>(m, "ZzCoupling")
      .def_readonly("angle", &ZzCoupling::angle);

  py::class_<GateSequence>(m, "GateSequence")
      .def_readonly("ops", &GateSequence::ops)
      .def_readonly("global_phase", &GateSequence::global_phase)
      .def("product", &gate_sequence_product)
      .def("to_text", &gate_sequence_to_text);

  py::class_<QfiEstimate>(m, "QfiEstimate")
      .def_readonly("value", &QfiEstimate::value)
      .def_readonly("delta", &QfiEstimate::delta)
      .def_readonly("p1_minus", &QfiEstimate::p1_minus)
      .def_readonly("p1_center", &QfiEstimate::p1_center)
      .def_readonly("p1_plus", &QfiEstimate::p1_plus);

  py::class_<EnergyBasisDecomposition::Coherence>(m, "Coherence")
      .def_readonly("i", &EnergyBasisDecomposition::Coherence::i)
      .def_readonly("j", &EnergyBasisDecomposition::Coherence::j)
      .def_readonly("magnitude", &EnergyBasisDecomposition::Coherence::magnitude)
      .def_readonly("phase", &EnergyBasisDecomposition::Coherence::phase);

  py::class_<EnergyBasisDecomposition>(m, "EnergyBasisDecomposition")
      .def_readonly("populations", &EnergyBasisDecomposition::populations)
      .def_readonly("coherences", &EnergyBasisDecomposition::coherences);

  py::class_<SensitivityReport>(m, "SensitivityReport")
      .def_readonly("quantum_variance", &SensitivityReport::quantum_variance)
      .def_readonly("classical_variance",
                    &SensitivityReport::classical_variance)
      .def_readonly("total_variance", &SensitivityReport::total_variance);

  m.def("qfi_analytic", &qfi_analytic, py::arg("bz"), py::arg("bx"));
  m.def("qfi_numeric", &qfi_numeric, py::arg("state_family"), py::arg("bz"),
        py::arg("db") = 1e-5);
  m.def("optimal_basis", &optimal_basis, py::arg("bz_hat"), py::arg("bx"));
  m.def("measure_probs", &measure_probs, py::arg("rho"), py::arg("basis"));
  m.def("ideal_prob", &ideal_prob, py::arg("bz"), py::arg("bz_hat"),
        py::arg("bx"));
  m.def("reconstruct_qfi", &reconstruct_qfi, py::arg("p_family"),
        py::arg("bz"), py::arg("delta"));
  m.def("delta1", &delta1, py::arg("bz"), py::arg("bx"), py::arg("delta"));
  m.def("delta2", &delta2, py::arg("p_sim_plus"), py::arg("p_sim_minus"),
        py::arg("p_ideal_plus"), py::arg("p_ideal_minus"), py::arg("bz"),
        py::arg("bx"), py::arg("delta"));
  m.def("energy_decomposition", &energy_decomposition, py::arg("rho"),
        py::arg("bz"), py::arg("bx"));
  m.def("build_uo", &build_uo, py::arg("bz_hat"), py::arg("bx"));
  m.def("decompose_uo", &decompose_uo, py::arg("u"));
  m.def("magic_matrix", &magic_matrix);
  m.def("sensitivity", &sensitivity, py::arg("bz"), py::arg("bz_hat"),
        py::arg("bx"), py::arg("epsilon"), py::arg("n_m"), py::arg("snr"));
  m.def(
      "response_and_bandwidth",
      [](double bx) {
        BandwidthResult res = response_and_bandwidth(bx);
        return py::make_tuple(res.response, res.bandwidth);
      },
      py::arg("bx"));
  m.def("deduce_bz", &deduce_bz, py::arg("m"), py::arg("bz_hat"),
        py::arg("bx"));
  m.def("accuracy", &accuracy, py::arg("delta_m"), py::arg("bz"),
        py::arg("bx"));
  m.def("to_tesla", &to_tesla, py::arg("bz"), py::arg("j_hz"),
        py::arg("gamma"));

  m.attr("COUPLING_HZ") = kCouplingHz;
  m.attr("GAMMA_H") = kGammaH;
  m.attr("GAMMA_C") = kGammaC;

  // ---- noise ----
  py::class_<BathSpec>(m, "BathSpec")
      .def(py::init([](double coupling, double inv_temperature) {
             return BathSpec{coupling, inv_temperature};
           }),
           py::arg("coupling"), py::arg("inv_temperature"))
      .def_readwrite("coupling", &BathSpec::coupling)
      .def_readwrite("inv_temperature", &BathSpec::inv_temperature);

  py::class_<SchemeCurve>(m, "SchemeCurve")
      .def_readonly("times", &SchemeCurve::times)
      .def_readonly("qfi_values", &SchemeCurve::qfi_values)
      .def_readonly("scheme", &SchemeCurve::scheme)
      .def_readonly("lambda_", &SchemeCurve::lambda)
      .def_readonly("inv_beta", &SchemeCurve::inv_beta);

  py::class_<SchemeComparison>(m, "SchemeComparison")
      .def_readonly("conventional", &SchemeComparison::conventional)
      .def_readonly("adiabatic_qfi", &SchemeComparison::adiabatic_qfi)
      .def_readonly("envelope", &SchemeComparison::envelope)
      .def_readonly("total_time", &SchemeComparison::total_time);

  m.def("bose_occupation", &bose_occupation, py::arg("omega_gap"),
        py::arg("beta"));
  m.def("master_step", &master_step, py::arg("rho"), py::arg("h_s"),
        py::arg("bath"), py::arg("dt"));
  m.def("evolve_master", &evolve_master, py::arg("plan"), py::arg("initial"),
        py::arg("bath"), py::arg("substeps") = 64);
  m.def("qfi_mixed", &qfi_mixed, py::arg("rho_family"), py::arg("bz"),
        py::arg("db") = 1e-4);
  m.def("conventional_scheme", &conventional_scheme, py::arg("bz"),
        py::arg("bath"), py::arg("t_grid"), py::arg("dt") = 0.01,
        py::arg("db") = 1e-4);
  m.def("compare_schemes", &compare_schemes, py::arg("cfg"), py::arg("baths"),
        py::arg("t_grid"), py::arg("greedy_params"), py::arg("m_plus_1") = 100,
        py::arg("substeps") = 64);
}
