#include "hkt/report.hpp"

#include "hkt/cohomology.hpp"
#include "hkt/hkt.hpp"
#include "hkt/qdolbeault.hpp"

namespace hkt {

namespace {

char index_char(int i) {  // 1-based generator index
  return i <= 9 ? static_cast<char>('0' + i) : static_cast<char>('a' + i - 10);
}

std::string salamon_entry(const Form& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [mask, c] : f.terms()) {
    Rational r = c.re;  // structure constants are real
    std::string coef;
    if (r == -1) {
      coef = "-";
    } else if (r != 1) {
      coef = rational_str(r) + "*";
      if (r > 0 && !out.empty()) coef = "+" + coef;
      if (r < 0) {
        // rational_str already carries the sign
      }
    } else if (!out.empty()) {
      coef = "+";
    }
    out += coef;
    for (int i = 0; i < 64; ++i)
      if (mask & (Mask(1) << i)) out += index_char(i + 1);
  }
  return out;
}

Json verdict_json(const Verdict& v) {
  Json j;
  switch (v.answer) {
    case Verdict::Answer::yes: j["hkt"] = "yes"; break;
    case Verdict::Answer::no: j["hkt"] = "no"; break;
    case Verdict::Answer::unknown: j["hkt"] = "unknown"; break;
  }
  j["basis"] = v.basis;
  j["h01"] = v.h01;
  j["witness"] = v.witness ? Json(v.witness->str()) : Json(nullptr);
  j["notes"] = v.notes;
  return j;
}

Json validation_json(const Instance& inst) {
  Json j;
  ValidationResult sv = validate_structure(inst.structure());
  j["structure_ok"] = sv.ok;
  j["structure_violations"] = sv.violations;
  j["jacobi"] = inst.jacobi_ok();
  j["nilpotent"] = inst.nilpotent();
  IntegrabilityResult ir = inst.check_integrability();
  j["integrable"] = Json{{"I", ir.I}, {"J", ir.J}, {"K", ir.K}};
  return j;
}

Json cohomology_json(const Instance& inst) {
  Json j;
  const int half = 2 * inst.n();
  Json hodge;
  for (int p = 0; p <= half; ++p)
    for (int q = 0; q <= half; ++q)
      hodge[std::to_string(p) + "," + std::to_string(q)] =
          dolbeault_h(p, q, inst).dimension;
  j["hodge"] = hodge;
  Json qbc, qae;
  for (int p = 0; p <= half; ++p) {
    qbc[std::to_string(p)] = qbc_h(p, inst).dimension;
    qae[std::to_string(p)] = qae_h(p, inst).dimension;
  }
  j["qbc"] = qbc;
  j["qae"] = qae;
  DdjLemmaResult lemma = ddj_lemma_check(inst);
  j["ddj_lemma"] = lemma.holds;
  j["ddj_witness"] = lemma.witness ? Json(lemma.witness->str()) : Json(nullptr);
  return j;
}

Json qd_json(const Instance& inst) {
  Json j;
  Json weights;
  for (int k = 0; k <= 2 * inst.n(); ++k) {
    Json row;
    for (const auto& [w, m] : weight_decompose(k, inst))
      row[std::to_string(w)] = m;
    weights[std::to_string(k)] = row;
  }
  j["weights"] = weights;
  j["bicomplex_isomorphism"] = bicomplex_isomorphism_check(inst);
  if (auto phi = find_phi(inst))
    j["v_map_lambda"] = rational_str(v_map_lambda(*phi, inst));
  else
    j["v_map_lambda"] = nullptr;
  return j;
}

Json hkt_json(const Instance& inst) {
  Json j;
  Verdict v = hkt_parity_verdict(inst);
  std::optional<Form> cert = find_hkt_form(inst);
  std::optional<Form> witness = find_obstruction_witness(inst);
  // Independent certificates must agree with the parity verdict.
  if (v.answer == Verdict::Answer::no && cert)
    throw ConsistencyError("certified HKT form on an instance with verdict no");
  if (v.answer == Verdict::Answer::yes && witness)
    throw ConsistencyError(
        "certified obstruction witness on an instance with verdict yes");
  if (v.answer == Verdict::Answer::no && witness) v.witness = witness;
  j["verdict"] = verdict_json(v);
  j["hkt_form"] = cert ? Json(cert->str()) : Json(nullptr);
  j["obstruction_witness"] = witness ? Json(witness->str()) : Json(nullptr);

  Json deg;
  std::optional<Form> phi = find_phi(inst);
  std::optional<Form> omega = find_gauduchon_form(inst);
  deg["gauduchon_form"] = omega ? Json(omega->str()) : Json(nullptr);
  if (omega && phi) {
    ExactSequenceReport seq = degree_exact_sequence_check(inst, *omega, *phi);
    deg["injective"] = seq.injective;
    deg["kernel_match"] = seq.kernel_match;
    bool all_zero = true;
    Mat k = kernel_basis(inst.op_del(2, 0) * inst.op_del_J(1, 0));
    for (Eigen::Index c = 0; c < k.cols() && all_zero; ++c)
      all_zero = degree(inst.from_coords_pq(k.col(c), 1, 0), *omega, *phi,
                        inst) == Scalar(0);
    deg["deg_identically_zero"] = all_zero;
    deg["gauduchon_equivalence"] =
        gauduchon_equivalence_check(*omega, *phi, inst);
  }
  j["degree"] = deg;
  return j;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "validate") return Command::validate;
  if (name == "cohomology") return Command::cohomology;
  if (name == "qd") return Command::qd;
  if (name == "hkt") return Command::hkt;
  if (name == "full") return Command::full;
  return std::nullopt;
}

std::string salamon_string(const LieAlgebraSpec& spec) {
  std::string out;
  for (int k = 0; k < spec.dim; ++k) {
    if (k) out += ",";
    out += salamon_entry(spec.differentials[static_cast<size_t>(k)]);
  }
  return out;
}

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(rational_str(m(i, j).re));
    rows.push_back(row);
  }
  return rows;
}

Json build_report(const Instance& inst, Command cmd,
                  const std::optional<Rational>& t) {
  Json j;
  Json echo;
  echo["id"] = inst.id();
  echo["dim"] = inst.dim();
  echo["n"] = inst.n();
  echo["t"] = t ? Json(rational_str(*t)) : Json(nullptr);
  echo["structure_equations"] = salamon_string(inst.spec());
  echo["I"] = matrix_json(inst.structure().I);
  echo["J"] = matrix_json(inst.structure().J);
  j["instance"] = echo;
  j["validation"] = validation_json(inst);
  if (cmd == Command::cohomology || cmd == Command::full)
    j["cohomology"] = cohomology_json(inst);
  if (cmd == Command::qd || cmd == Command::full) j["qd"] = qd_json(inst);
  if (cmd == Command::hkt || cmd == Command::full) j["hkt"] = hkt_json(inst);
  if (cmd == Command::full) {
    // Cross-checks tying the sections together.
    Json cross;
    const Json& coh = j["cohomology"];
    Json duality;
    bool dims_match = true;
    bool gram_full = true;
    if (auto phi = find_phi(inst)) {
      const int half = 2 * inst.n();
      for (int p = 0; p <= half; ++p) {
        CohomologyGroup bc = qbc_h(p, inst);
        CohomologyGroup ae = qae_h(half - p, inst);
        if (bc.dimension != ae.dimension) dims_match = false;
        if (bc.dimension == 0) continue;
        Mat gram(bc.dimension, ae.dimension);
        for (int r = 0; r < bc.dimension; ++r)
          for (int c = 0; c < ae.dimension; ++c)
            gram(r, c) =
                duality_pairing(bc.representatives[static_cast<size_t>(r)],
                                ae.representatives[static_cast<size_t>(c)],
                                *phi, inst);
        if (rank(gram) != std::min(bc.dimension, ae.dimension))
          gram_full = false;
      }
    }
    duality["dimensions_match"] = dims_match;
    duality["pairing_nondegenerate"] = gram_full;
    cross["duality"] = duality;
    int h01 = coh["hodge"]["0,1"].get<int>();
    bool lemma = coh["ddj_lemma"].get<bool>();
    if (lemma != (h01 % 2 == 0))
      throw ConsistencyError("ddj lemma disagrees with the parity of h^{0,1}");
    cross["ddj_matches_parity"] = true;
    j["cross_checks"] = cross;
  }
  return j;
}

}  // namespace hkt
