#include "thetagroup/report.hpp"

#include <sstream>
#include <stdexcept>

namespace thetagroup {

OutputRow to_output(const ClassificationRow& row) {
  OutputRow o;
  o.type = row.type;
  o.kac = row.kac;
  o.order = row.order;
  o.carter = row.carter;
  o.rank = row.rank;
  o.little_weyl = row.little_weyl.name;
  o.little_weyl_order = row.little_weyl.order();
  o.degrees = row.little_weyl.degrees;
  o.reduction = row.kw.reduction;
  o.theta_on_l = row.kw.theta_on_l;
  o.n_regular = row.kw.n_regular;
  o.criterion = row.kw.criterion;
  o.note = row.note;
  return o;
}

Json to_json(const OutputRow& r) {
  Json j;
  j["type"] = r.type;
  j["kac"] = r.kac;
  j["order"] = r.order;
  j["carter"] = r.carter;
  j["rank"] = r.rank;
  j["little_weyl"] = {{"name", r.little_weyl}, {"order", r.little_weyl_order}, {"degrees", r.degrees}};
  j["kw"] = {{"reduction", r.reduction},
             {"theta_on_L", r.theta_on_l},
             {"n_regular", r.n_regular},
             {"criterion", r.criterion}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

OutputRow output_row_from_json(const Json& j) {
  OutputRow r;
  r.type = j.at("type").get<std::string>();
  r.kac = j.at("kac").get<std::string>();
  r.order = j.at("order").get<int>();
  r.carter = j.at("carter").get<std::string>();
  r.rank = j.at("rank").get<int>();
  const Json& lw = j.at("little_weyl");
  r.little_weyl = lw.at("name").get<std::string>();
  r.little_weyl_order = lw.at("order").get<int>();
  r.degrees = lw.at("degrees").get<std::vector<int>>();
  const Json& kw = j.at("kw");
  r.reduction = kw.at("reduction").get<std::string>();
  r.theta_on_l = kw.at("theta_on_L").get<std::string>();
  r.n_regular = kw.at("n_regular").get<bool>();
  r.criterion = kw.at("criterion").get<bool>();
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  return r;
}

namespace {

Json zero_rank_json(const Dossier& d) {
  const auto& z = *d.zero_rank;
  return Json{{"kac", d.kac},
              {"order", d.order},
              {"g0_type", d.g0_type},
              {"dim_g0", z.dim_g0},
              {"dim_g1", z.dim_g1},
              {"centralizer_dim", z.centralizer},
              {"witness", z.witness}};
}

std::string degrees_str(const std::vector<int>& d) {
  std::string s;
  for (size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
  return s;
}

}  // namespace

Json table_json(const std::string& type, const Classification& c) {
  Json j;
  j["type"] = type;
  j["rows"] = Json::array();
  for (const auto& r : c.rows) j["rows"].push_back(to_json(to_output(r)));
  j["zero_rank"] = Json::array();
  for (const auto& z : c.zero_rank) j["zero_rank"].push_back(zero_rank_json(z));
  return j;
}

std::string table_markdown(const std::string& type, const Classification& c) {
  std::ostringstream out;
  out << "Positive rank automorphisms in type " << type << "\n\n";
  out << "| Kac diagram | m | w | r | W_c | L | θ\\|_L |\n";
  out << "|---|---|---|---|---|---|---|\n";
  std::vector<std::string> notes;
  for (const auto& r : c.rows) {
    out << "| " << r.kac << " | " << r.order << " | " << r.carter << " | " << r.rank << " | " << r.little_weyl.name
        << " | " << r.kw.reduction << " | " << r.kw.theta_on_l << " |\n";
    if (!r.note.empty()) notes.push_back(r.kac + ": " + r.note);
  }
  if (!notes.empty()) {
    out << "\n";
    for (const auto& n : notes) out << "- " << n << "\n";
  }
  out << "\nZero rank:";
  if (c.zero_rank.empty()) out << " none";
  for (size_t i = 0; i < c.zero_rank.size(); ++i)
    out << (i ? ", " : " ") << c.zero_rank[i].kac << " (m=" << c.zero_rank[i].order << ")";
  out << "\n";
  return out.str();
}

Json dossier_json(const Dossier& d) {
  Json j;
  j["type"] = d.type;
  j["kac"] = d.kac;
  j["order"] = d.order;
  j["field"] = d.field;
  j["g0_type"] = d.g0_type;
  j["dims"] = d.dims;
  j["rank"] = d.orbit.rank;
  j["generic_orbit"] = {{"dim_g0", d.orbit.dim_g0},
                        {"dim_g1", d.orbit.dim_g1},
                        {"min_centralizer_dim", d.orbit.min_centralizer},
                        {"witnessed", d.orbit.witnessed}};
  if (d.zero_rank) j["zero_rank"] = zero_rank_json(d);
  if (d.row) {
    const auto& r = *d.row;
    Json row = to_json(to_output(r));
    row["rank_weyl"] = r.rank_weyl;
    row["cartan_dim"] = r.cartan_dim;
    row["w_phi2_trivial"] = r.w_phi2_trivial;
    row["semisimple_witness"] = r.semisimple_witness;
    row["little_weyl"]["reflections"] = Json::object();
    for (auto [o, n] : r.little_weyl.reflection_orders) row["little_weyl"]["reflections"][std::to_string(o)] = n;
    row["kw"]["stable"] = r.kw.stable;
    row["kw"]["contains_c"] = r.kw.contains_c;
    row["kw"]["little_weyl_match"] = r.kw.little_weyl_match;
    row["kw"]["degree_identity"] = r.kw.degree_identity;
    row["kw"]["notes"] = r.kw.notes;
    j["row"] = row;
  }
  return j;
}

std::string dossier_text(const Dossier& d) {
  std::ostringstream out;
  std::string dims;
  for (size_t i = 0; i < d.dims.size(); ++i) dims += (i ? " " : "") + std::to_string(d.dims[i]);
  out << "type        " << d.type << "\n"
      << "diagram     " << d.kac << "\n"
      << "order       " << d.order << "\n"
      << "field       " << d.field << "\n"
      << "g(0)        " << d.g0_type << "\n"
      << "dims g(i)   " << dims << "\n"
      << "rank        " << d.orbit.rank << "\n";
  if (d.zero_rank) {
    const auto& z = *d.zero_rank;
    out << "zero rank   dim g(0) = " << z.dim_g0 << ", dim g(1) = " << z.dim_g1 << "\n"
        << "witness     " << z.witness << " (centralizer in g(0) of dimension " << z.centralizer << ")\n"
        << "dense orbit " << z.dim_g0 << " - " << z.centralizer << " = " << z.dim_g0 - z.centralizer
        << " = dim g(1)\n";
  }
  if (d.row) {
    const auto& r = *d.row;
    out << "w           " << r.carter << "\n"
        << "W_c         " << r.little_weyl.name << " of order " << r.little_weyl.order() << ", degrees "
        << degrees_str(r.little_weyl.degrees) << "\n"
        << "L           " << r.kw.reduction << (r.kw.theta_on_l.empty() ? "" : ", θ|_L " + r.kw.theta_on_l) << "\n"
        << "semisimple  " << (r.semisimple_witness.empty() ? "-" : r.semisimple_witness) << "\n"
        << "KW evidence " << (r.kw.verified() ? "verified" : "incomplete")
        << (r.kw.criterion ? ", W_c = W-bar certified" : "") << "\n";
    for (const auto& n : r.kw.notes) out << "            " << n << "\n";
    if (!r.note.empty()) out << "note        " << r.note << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- suites

namespace {

const std::vector<std::string> kTypes = {"G2", "F4", "D4-3"};

void add(std::vector<SuiteItem>& out, std::string item, bool pass, std::string detail = {}) {
  out.push_back({std::move(item), pass, std::move(detail)});
}

std::vector<SuiteItem> counting_suite() {
  std::vector<SuiteItem> out;
  // orders below 10 keep every diagram printable in the compact notation
  for (auto [type, maxm] : std::vector<std::pair<std::string, int>>{{"G2", 9}, {"F4", 9}})
    for (int m = 2; m <= maxm; ++m) {
      CountingResult r = counting_check(affine_diagram(type, 1), m);
      add(out, type + " m=" + std::to_string(m), r.equal, r.lhs.get_str() + " = " + r.rhs.get_str());
    }
  return out;
}

std::vector<SuiteItem> zero_rank_suite(std::uint64_t seed) {
  std::vector<SuiteItem> out;
  for (const auto& t : kTypes) {
    Classifier c(t);
    auto res = c.classify({}, seed);
    for (const auto& z : res.zero_rank) {
      const auto& cert = *z.zero_rank;
      bool dense = cert.dim_g0 - cert.centralizer == cert.dim_g1;
      int weyl = c.weyl_side_rank(parse_kac_diagram(c.affine(), z.kac));
      add(out, z.type + " " + z.kac, z.orbit.rank == 0 && dense && weyl == 0,
          "dim g(0) = " + std::to_string(cert.dim_g0) + ", dim g(1) = " + std::to_string(cert.dim_g1) +
              ", witness " + cert.witness + " with centralizer " + std::to_string(cert.centralizer) +
              ", Weyl side rank " + std::to_string(weyl));
    }
  }
  // the reference witnesses
  RootSystem f4 = RootSystem::build("F4");
  AffineDiagram aff = affine_diagram("F4", 1);
  for (auto [kac, wit, cd] : std::vector<std::tuple<std::string, std::string, int>>{
           {"00011", "e_0010+e_0001", 11}, {"00010", "e_0010+f_1231", 10}}) {
    KacDiagram d = parse_kac_diagram(aff, kac);
    LieAlgebra g(f4, Field::cyclotomic(d.order()));
    Grading gr = grading(kac_automorphism(d, g), d.order());
    Vec x = g.parse_element(wit);
    bool in_g1 = in_span(g.field(), gr.spaces[1], x);
    int got = g.centralizer_dim(x, gr.spaces[0]);
    add(out, "F4 " + kac + " witness " + wit, in_g1 && got == cd && gr.dim(0) - got == gr.dim(1),
        "centralizer " + std::to_string(got));
  }
  return out;
}

std::vector<SuiteItem> row_suite(std::uint64_t seed, bool kw) {
  std::vector<SuiteItem> out;
  for (const auto& t : kTypes) {
    Classifier c(t);
    for (const auto& r : c.classify({}, seed).rows) {
      std::string item = r.type + " " + r.kac;
      if (kw) {
        std::string detail = r.kw.reduction + (r.kw.theta_on_l.empty() ? "" : " " + r.kw.theta_on_l);
        add(out, item, r.kw.verified(), detail);
      } else {
        add(out, item, r.kw.criterion && r.w_phi2_trivial,
            std::string("W_c = ") + r.little_weyl.name + (r.w_phi2_trivial ? "" : ", W(Phi_2) acts"));
      }
    }
  }
  return out;
}

std::vector<SuiteItem> jacobi_suite(std::uint64_t seed) {
  std::vector<SuiteItem> out;
  for (auto [type, samples] : std::vector<std::pair<std::string, long>>{{"G2", -1}, {"F4", 10000}, {"D4", 10000}}) {
    LieAlgebra g(RootSystem::build(type), Field::cyclotomic(1));
    add(out, type + " structure constants", g.check_structure_constants());
    add(out, type + (samples < 0 ? " Jacobi (all triples)" : " Jacobi (10000 random triples)"),
        g.check_jacobi(seed, samples));
  }
  // grading compatibility for every classified automorphism and the two F4 zero-rank cases
  for (const auto& t : kTypes) {
    Classifier c(t);
    std::vector<std::string> kacs;
    for (const auto& r : c.classify({}, seed).rows) kacs.push_back(r.kac);
    if (t == "F4") {
      kacs.push_back("00011");
      kacs.push_back("00010");
    }
    RootSystem rs = RootSystem::build(t == "D4-3" ? "D4" : t);
    for (const auto& k : kacs) {
      KacDiagram d = parse_kac_diagram(c.affine(), k);
      LieAlgebra g(rs, Field::cyclotomic(d.order()));
      Automorphism th = kac_automorphism(d, g);
      add(out, t + " " + k + " grading", check_grading_compatibility(grading(th, d.order()), th));
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"counting", "zero-rank", "criterion", "kw-sections", "jacobi"};
  return names;
}

std::vector<SuiteItem> run_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "counting") return counting_suite();
  if (suite == "zero-rank") return zero_rank_suite(seed);
  if (suite == "criterion") return row_suite(seed, false);
  if (suite == "kw-sections") return row_suite(seed, true);
  if (suite == "jacobi") return jacobi_suite(seed);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace thetagroup
