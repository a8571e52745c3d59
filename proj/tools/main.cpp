// Copyright 2026 The triqent authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "triqent/catalog.hpp"
#include "triqent/classify.hpp"
#include "triqent/decompose.hpp"
#include "triqent/io.hpp"
#include "triqent/slocc.hpp"

namespace fs = std::filesystem;
using namespace triqent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
  Tolerances tol;
  std::uint64_t seed = kDefaultSeed;
  bool pretty = false;
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--tol-rank", opts.tol.rank, "numerical rank threshold");
  cmd->add_option("--tol-cluster", opts.tol.cluster, "eigenvalue cluster radius");
  cmd->add_option("--tol-recon", opts.tol.recon, "reconstruction fidelity slack");
  cmd->add_option("--tol-cert", opts.tol.cert, "certificate verification residual");
  cmd->add_option("--seed", opts.seed, "seed for the deterministic random fallbacks");
  cmd->add_flag("--pretty", opts.pretty, "indent the JSON report");
  cmd->add_option("--output", opts.output, "write the report to a file instead of stdout");
}

void emit(const Json& doc, const CommonOpts& opts) {
  const std::string text = dump_report(doc, opts.pretty);
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output);
  if (!out) throw InvalidStateError("cannot write " + opts.output);
  out << text;
}

/// Writes atomically: to a temporary sibling first, then rename.
void write_atomic(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InvalidStateError("cannot write " + tmp.string());
    out << text;
  }
  fs::rename(tmp, path);
}

Json classify_to_json(const TripartiteState& state, const CommonOpts& opts) {
  Json doc = classify_report_to_json(classify(state, opts.tol, opts.seed), opts.tol);
  if (!state.label().empty()) doc["label"] = state.label();
  return doc;
}

int cmd_classify(const std::string& input, const std::string& batch, const CommonOpts& opts) {
  if (!batch.empty()) {
    if (!fs::is_directory(batch)) throw InvalidStateError("--batch expects a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(batch)) {
      if (e.is_regular_file() && e.path().extension() == ".json" &&
          !e.path().stem().string().ends_with(".report")) {
        files.push_back(e.path());
      }
    }
    std::sort(files.begin(), files.end());
    std::atomic<std::size_t> next{0};
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(files.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
          Json doc;
          try {
            doc = classify_to_json(state_from_json(read_json_file(files[i].string())), opts);
          } catch (const std::exception& err) {
            doc = Json{{"class", "error"}, {"message", err.what()}};
          }
          const fs::path out = files[i].parent_path() /
                               (files[i].stem().string() + ".report.json");
          write_atomic(out, dump_report(doc, opts.pretty));
        }
      });
    }
    for (auto& t : pool) t.join();
    return kExitOk;
  }
  emit(classify_to_json(state_from_json(read_json_file(input)), opts), opts);
  return kExitOk;
}

int cmd_decompose(const std::string& input, bool all, int limit, const CommonOpts& opts) {
  const TripartiteState state = state_from_json(read_json_file(input));
  if (all || limit > 0) {
    Json arr = Json::array();
    for (const auto& d :
         enumerate_decompositions(state, limit, opts.tol, opts.seed)) {
      arr.push_back(decomposition_to_json(d));
    }
    Json doc{{"decompositions", std::move(arr)}, {"tolerances", tolerances_to_json(opts.tol)}};
    emit(doc, opts);
  } else {
    Json doc = decomposition_to_json(min_decomposition(state, opts.tol, opts.seed));
    doc["tolerances"] = tolerances_to_json(opts.tol);
    emit(doc, opts);
  }
  return kExitOk;
}

int cmd_compare(const std::string& input_a, const std::string& input_b,
                const CommonOpts& opts) {
  const TripartiteState a = state_from_json(read_json_file(input_a));
  const TripartiteState b = state_from_json(read_json_file(input_b));
  SloccDecision decision = equivalent(a, b, opts.tol, opts.seed);

  // Certificates are produced on the compressed supports; embed them into
  // the ambient spaces when the input files carried larger dimensions.
  std::string frame = "ambient";
  if (decision.certificate) {
    const LocalSupport sup_a = local_supports(a, opts.tol.rank);
    const LocalSupport sup_b = local_supports(b, opts.tol.rank);
    const bool compressed_a = sup_a.ranks != a.dims();
    const bool compressed_b = sup_b.ranks != b.dims();
    if ((compressed_a || compressed_b) && a.dims() != b.dims()) {
      frame = "compressed";
    }
    if ((compressed_a || compressed_b) && a.dims() == b.dims()) {
      auto embed = [](const Matrix& op, const Matrix& iso_src, const Matrix& iso_dst) {
        const int dim = static_cast<int>(iso_src.rows());
        const Matrix comp_src = orthonormal_complement(iso_src, dim);
        const Matrix comp_dst = orthonormal_complement(iso_dst, dim);
        return Matrix(iso_dst * op * iso_src.adjoint() + comp_dst * comp_src.adjoint());
      };
      auto& cert = *decision.certificate;
      cert.A = embed(cert.A, sup_a.isometries[0], sup_b.isometries[0]);
      cert.B = embed(cert.B, sup_a.isometries[1], sup_b.isometries[1]);
      cert.C = embed(Matrix(cert.C), sup_a.isometries[2], sup_b.isometries[2]);
      cert.residual = 1.0 - fidelity(apply_local(a, cert.A, cert.B, Matrix(cert.C)), b);
      if (!(cert.residual <= opts.tol.cert)) {
        throw NumericalError("embedded certificate failed verification");
      }
    }
  }
  Json doc = certificate_to_json(decision);
  if (decision.certificate) doc["certificate_frame"] = frame;
  doc["tolerances"] = tolerances_to_json(opts.tol);
  emit(doc, opts);
  return kExitOk;
}

int cmd_generate(const std::string& name, const std::string& param_text, bool random_image,
                 const CommonOpts& opts) {
  std::optional<Complex> param;
  if (!param_text.empty()) {
    double re = 0.0, im = 0.0;
    char extra = 0;
    const int got = std::sscanf(param_text.c_str(), "%lf,%lf%c", &re, &im, &extra);
    if (got == 1) {
      im = 0.0;
    } else if (got != 2) {
      throw InvalidStateError("--param expects RE or RE,IM");
    }
    param = Complex{re, im};
  }
  CatalogEntry entry = named(name, param);
  TripartiteState state = random_image ? random_in_class(entry, opts.seed) : entry.state;
  emit(state_to_json(state), opts);
  return kExitOk;
}

int cmd_group(const std::string& input, const CommonOpts& opts) {
  const GroupedDocument doc = grouped_from_json(read_json_file(input));
  TripartiteState grouped = group_subsystems(doc.tensor, doc.groups, doc.label).normalized();
  emit(state_to_json(grouped), opts);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "triqent: classification, minimal decompositions and SLOCC certificates for "
      "tripartite pure states with one qubit"};
  app.require_subcommand(1);

  CommonOpts classify_opts, decompose_opts, compare_opts, generate_opts, group_opts;
  std::string classify_input, batch_dir;
  std::string decompose_input;
  bool decompose_all = false;
  int decompose_limit = 0;
  std::string compare_a, compare_b;
  std::string generate_name, generate_param;
  bool generate_random_image = false;
  std::string group_input;

  auto* c_classify =
      app.add_subcommand("classify", "Jordan family report for a state file");
  c_classify->add_option("input", classify_input, "state file (JSON)");
  c_classify->add_option("--batch", batch_dir, "classify every *.json in a directory");
  add_common(c_classify, classify_opts);

  auto* c_decompose =
      app.add_subcommand("decompose", "sub-Schmidt decomposition of a state file");
  c_decompose->add_option("input", decompose_input, "state file (JSON)")->required();
  c_decompose->add_flag("--all", decompose_all, "emit every pairwise decomposition");
  c_decompose->add_option("--limit", decompose_limit, "keep at most N decompositions");
  add_common(c_decompose, decompose_opts);

  auto* c_compare =
      app.add_subcommand("compare", "decide SLOCC equivalence of two state files");
  c_compare->add_option("a", compare_a, "first state file")->required();
  c_compare->add_option("b", compare_b, "second state file")->required();
  add_common(c_compare, compare_opts);

  auto* c_generate = app.add_subcommand("generate", "emit a catalog state");
  c_generate->add_option("name", generate_name, "catalog state name")->required();
  c_generate->add_option("--param", generate_param, "family parameter RE[,IM]");
  c_generate->add_flag("--random-image", generate_random_image,
                       "apply a seeded random invertible local operator");
  add_common(c_generate, generate_opts);

  auto* c_group = app.add_subcommand("group", "regroup a multi-factor tensor into 3 parts");
  c_group->add_option("input", group_input, "grouping document (JSON)")->required();
  add_common(c_group, group_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitInput;
  }

  try {
    for (const auto* opts :
         {&classify_opts, &decompose_opts, &compare_opts, &generate_opts, &group_opts}) {
      opts->tol.validate();
    }
    if (c_classify->parsed()) {
      if (classify_input.empty() && batch_dir.empty()) {
        throw InvalidStateError("classify needs an input file or --batch");
      }
      return cmd_classify(classify_input, batch_dir, classify_opts);
    }
    if (c_decompose->parsed()) {
      return cmd_decompose(decompose_input, decompose_all, decompose_limit, decompose_opts);
    }
    if (c_compare->parsed()) return cmd_compare(compare_a, compare_b, compare_opts);
    if (c_generate->parsed()) {
      return cmd_generate(generate_name, generate_param, generate_random_image, generate_opts);
    }
    if (c_group->parsed()) return cmd_group(group_input, group_opts);
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
