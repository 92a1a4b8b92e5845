#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dk/blocks.hpp"
#include "dk/characters.hpp"
#include "dk/delta_complex.hpp"
#include "dk/diagram.hpp"
#include "dk/error.hpp"
#include "dk/grothendieck.hpp"
#include "dk/partition.hpp"

using nlohmann::json;

namespace {

json partition_json(const dk::Partition& p) { return json(p.parts()); }

json kelement_json(const dk::KElement& e) {
  json mult = json::object();
  for (const auto& [p, m] : e.mult) mult[p.to_string()] = m;
  return mult;
}

// Read the arities of a diagram off its block syntax: every bottom point
// 1..r and top point 1'..s' appears exactly once, so the maxima suffice.
dk::SetPartitionDiagram parse_diagram(const std::string& text) {
  int r = 0, s = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) continue;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    const int v = std::stoi(text.substr(i, j - i));
    if (j < text.size() && text[j] == '\'')
      s = std::max(s, v);
    else
      r = std::max(r, v);
    i = j;
  }
  return dk::SetPartitionDiagram::parse(r, s, text);
}

dk::Relation parse_relation(const std::string& text, int& k_out) {
  // Same bracket syntax as diagrams, without primes: "[[1,2],[3]]".
  dk::Relation rel;
  int k = 0;
  std::vector<int> cur;
  bool in_block = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      const int v = std::stoi(text.substr(i, j - i));
      if (!in_block) dk::fail_validation("BadRelation: number outside block");
      cur.push_back(v - 1);
      k = std::max(k, v);
      i = j - 1;
    } else if (c == '[') {
      if (in_block && i > 0) dk::fail_validation("BadRelation: nested block");
      if (i > 0) {
        in_block = true;
        cur.clear();
      }
    } else if (c == ']') {
      if (in_block) {
        rel.push_back(cur);
        in_block = false;
      }
    } else if (c != ',' && !std::isspace(static_cast<unsigned char>(c))) {
      dk::fail_validation("BadRelation: unexpected character");
    }
  }
  k_out = k;
  return rel;
}

json morphism_json(const dk::DiagramMorphism& m) {
  json terms = json::object();
  for (const auto& [d, c] : m.terms) terms[d.to_string()] = c.to_string();
  return json{{"r", m.r}, {"s", m.s}, {"terms", terms}};
}

void emit(const json& j, bool text) {
  if (text)
    std::cout << j.dump() << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deligne-kit: combinatorial invariants of Deligne categories"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  int cap_N = 7, cap_bell = 7, stab_max = 18;
  app.add_option("--cap-n", cap_N, "Largest N for complex construction")
      ->envname("DK_CAP_N");
  app.add_option("--cap-bell", cap_bell, "Largest k for idempotents")
      ->envname("DK_CAP_BELL");
  app.add_option("--cap-stab", stab_max, "Plateau search cap for rkron")
      ->envname("DK_STAB_MAX");

  std::string lambda_s, mu_s, nu_s, rho_s, tau_s, f_s, g_s, d_s, rel_s;
  std::string basis = "simple";
  int t = 0, n = 0, N = 0, k = 0, i_max = 4;
  bool generic = false;

  auto* charval = app.add_subcommand("charval", "Irreducible character value");
  charval->add_option("--lambda", lambda_s)->required();
  charval->add_option("--rho", rho_s)->required();

  auto* kron = app.add_subcommand("kron", "Kronecker coefficient");
  kron->add_option("--lambda", lambda_s)->required();
  kron->add_option("--mu", mu_s)->required();
  kron->add_option("--nu", nu_s)->required();

  auto* rkron = app.add_subcommand("rkron", "Stable Kronecker coefficient");
  rkron->add_option("--lambda", lambda_s)->required();
  rkron->add_option("--mu", mu_s)->required();
  rkron->add_option("--tau", tau_s)->required();

  auto* compose_cmd = app.add_subcommand("compose", "Compose two diagrams");
  compose_cmd->add_option("--g", g_s, "Outer diagram")->required();
  compose_cmd->add_option("--f", f_s, "Inner diagram")->required();

  auto* xr = app.add_subcommand("xr", "Idempotent attached to a relation");
  xr->add_option("--classes", rel_s, "Equivalence classes, e.g. [[1,2],[3]]")
      ->required();

  auto* evaln = app.add_subcommand("evalN", "Evaluate a diagram at integer N");
  evaln->add_option("--d", d_s, "Diagram")->required();
  evaln->add_option("--N", N)->required();

  auto* blocks_cmd = app.add_subcommand("blocks", "Block data at integer t");
  blocks_cmd->add_option("--t", t)->required();
  blocks_cmd->add_option("--lambda", lambda_s)->required();
  blocks_cmd->add_option("--imax", i_max);

  auto* bset = app.add_subcommand("bset", "Indecomposable summand labels");
  bset->add_option("--t", t)->required();
  bset->add_option("--mu", mu_s)->required();

  auto* gammaq = app.add_subcommand("gammaq", "Specialized injective");
  gammaq->add_option("--t", t)->required();
  gammaq->add_option("--lambda", lambda_s)->required();

  auto* kcomplex = app.add_subcommand("kcomplex", "Cohomology of the complex");
  kcomplex->add_option("--n", n)->required();
  kcomplex->add_option("--N", N)->required();
  kcomplex->add_option("--mu", mu_s, "Restrict to one S_n label");

  auto* dgamma = app.add_subcommand("dgamma", "Derived specialization");
  dgamma->add_option("--mu", mu_s)->required();
  dgamma->add_option("--N", N)->required();

  auto* tensor = app.add_subcommand("tensor", "Tensor multiplicities");
  tensor->add_option("--t", t);
  tensor->add_option("--lambda", lambda_s)->required();
  tensor->add_option("--mu", mu_s)->required();
  tensor->add_option("--tau", tau_s);
  tensor->add_option("--basis", basis)
      ->check(CLI::IsMember({"simple", "standard"}));
  tensor->add_flag("--generic", generic, "Generic t (everything standard)");

  auto* pad_cmd = app.add_subcommand("pad", "Pad a partition to size n");
  pad_cmd->add_option("--lambda", lambda_s)->required();
  pad_cmd->add_option("--n", n)->required();

  auto* hooks = app.add_subcommand("hooks", "Row-1 hook data");
  hooks->add_option("--mu", mu_s)->required();

  // Let global options (--format, --cap-*) appear after the subcommand name.
  for (CLI::App* sc :
       app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  const bool text = (format == "text");
  try {
    if (*charval) {
      emit({{"value", dk::mn_character(dk::Partition::parse(lambda_s),
                                       dk::Partition::parse(rho_s))}},
           text);
    } else if (*kron) {
      emit({{"value", dk::kronecker(dk::Partition::parse(lambda_s),
                                    dk::Partition::parse(mu_s),
                                    dk::Partition::parse(nu_s))}},
           text);
    } else if (*rkron) {
      emit({{"value", dk::reduced_kronecker(dk::Partition::parse(lambda_s),
                                            dk::Partition::parse(mu_s),
                                            dk::Partition::parse(tau_s),
                                            stab_max)}},
           text);
    } else if (*compose_cmd) {
      const auto f = dk::DiagramMorphism::single(parse_diagram(f_s));
      const auto g = dk::DiagramMorphism::single(parse_diagram(g_s));
      emit(morphism_json(dk::compose(g, f)), text);
    } else if (*xr) {
      const dk::Relation rel = parse_relation(rel_s, k);
      emit(morphism_json(dk::x_R(k, rel, cap_bell)), text);
    } else if (*evaln) {
      const auto m = dk::evaluate_at_N(
          dk::DiagramMorphism::single(parse_diagram(d_s)), N);
      json rows = json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
          row.push_back(m.at(r, c).convert_to<long long>());
        rows.push_back(std::move(row));
      }
      emit({{"rows", m.rows()}, {"cols", m.cols()}, {"matrix", rows}}, text);
    } else if (*blocks_cmd) {
      const dk::Partition lambda = dk::Partition::parse(lambda_s);
      const dk::BlockPosition pos = dk::classify(lambda, t);
      json out;
      if (pos.semisimple) {
        out["classification"] = {{"semisimple", true}};
      } else {
        out["classification"] = {{"semisimple", false},
                                 {"base", partition_json(pos.base)},
                                 {"index", pos.index}};
      }
      if (t - lambda.size() >= lambda.first_part()) {
        json seq = json::array();
        for (const auto& p : dk::block_sequence(lambda, t, i_max))
          seq.push_back(partition_json(p));
        out["sequence"] = seq;
      }
      emit(out, text);
    } else if (*bset) {
      json list = json::array();
      for (const auto& p : dk::b_set(dk::Partition::parse(mu_s), t))
        list.push_back(partition_json(p));
      emit({{"bset", list}}, text);
    } else if (*gammaq) {
      emit({{"basis", "indecomposable"},
            {"mult", kelement_json(dk::gamma_Q(dk::Partition::parse(lambda_s), t))}},
           text);
    } else if (*kcomplex) {
      const auto table = dk::cohomology_bimodule(n, N, 4, cap_N);
      json out = json::object();
      for (const auto& [deg, decomp] : table) {
        json row = json::object();
        for (const auto& [pair, m] : decomp) {
          if (!mu_s.empty() && pair.first != dk::Partition::parse(mu_s))
            continue;
          row["(" + pair.first.to_string() + "," + pair.second.to_string() +
              ")"] = m;
        }
        if (!row.empty()) out[std::to_string(deg)] = row;
      }
      emit(out, text);
    } else if (*dgamma) {
      const auto res = dk::derived_gamma(dk::Partition::parse(mu_s), N);
      if (res.value)
        emit({{"degree", res.degree}, {"value", partition_json(*res.value)}},
             text);
      else
        emit({{"degree", nullptr}, {"value", nullptr}}, text);
    } else if (*tensor) {
      const dk::Partition lambda = dk::Partition::parse(lambda_s);
      const dk::Partition mu = dk::Partition::parse(mu_s);
      const bool standard = generic || basis == "standard";
      if (!tau_s.empty()) {
        const dk::Partition tau = dk::Partition::parse(tau_s);
        const long long v =
            standard
                ? dk::tensor_standard_multiplicity(lambda, mu, tau, stab_max)
                : dk::simple_tensor_multiplicity(lambda, mu, tau, t, stab_max);
        emit({{"value", v}}, text);
      } else {
        json mult = json::object();
        if (standard) {
          for (int sz = 0; sz <= lambda.size() + mu.size(); ++sz)
            for (const auto& tau : dk::partitions_of(sz)) {
              const long long v =
                  dk::tensor_standard_multiplicity(lambda, mu, tau, stab_max);
              if (v != 0) mult[tau.to_string()] = v;
            }
        } else {
          for (const auto& [tau, v] :
               dk::simple_tensor_expand(lambda, mu, t, stab_max))
            mult[tau.to_string()] = v;
        }
        emit({{"mult", mult}}, text);
      }
    } else if (*pad_cmd) {
      emit({{"value", partition_json(dk::pad(dk::Partition::parse(lambda_s), n))}},
           text);
    } else if (*hooks) {
      json list = json::array();
      for (const auto& h : dk::row1_hooks(dk::Partition::parse(mu_s)))
        list.push_back({{"j", h.vertex_col},
                        {"N", h.target_size},
                        {"m", h.height},
                        {"remainder", partition_json(h.remainder)}});
      emit({{"hooks", list}}, text);
    }
  } catch (const dk::Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case dk::ErrorKind::Validation:
        return 2;
      case dk::ErrorKind::CapExceeded:
        return 3;
      case dk::ErrorKind::StabilizationNotReached:
        return 4;
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
