// stepqa: dataset ingestion, training-data construction, inference,
// response execution, and evaluation for step-wise tabular/textual QA.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or schema error, 3 backend
// failure (no inference request succeeded).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stepqa/analysis.hpp"
#include "stepqa/dataset.hpp"
#include "stepqa/equation.hpp"
#include "stepqa/errors.hpp"
#include "stepqa/executor.hpp"
#include "stepqa/gateway.hpp"
#include "stepqa/gold.hpp"
#include "stepqa/json_support.hpp"
#include "stepqa/metrics.hpp"
#include "stepqa/response.hpp"
#include "stepqa/text_util.hpp"

namespace {

using nlohmann::json;
using namespace stepqa;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitBackend = 3;

Dataset require_dataset(const std::string& name) {
  auto d = dataset_from_string(name);
  if (!d) throw Error("unknown dataset: " + name + " (expected finqa, tatqa, or tatdqa)");
  return *d;
}

std::string infer_split(const std::string& path, const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  const std::string name = to_lower(std::filesystem::path(path).filename().string());
  for (const char* s : {"train", "dev", "test"}) {
    if (name.find(s) != std::string::npos) return s;
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

int cmd_ingest_stats(const std::string& dataset_name, const std::string& path,
                     const std::string& split_flag) {
  const Dataset d = require_dataset(dataset_name);
  const auto instances = load_dataset(d, path);
  const SplitStats s = stats(d, infer_split(path, split_flag), instances);
  std::cout << to_string(s.dataset) << " " << s.split << " " << s.count << "\n";
  return kExitOk;
}

int cmd_build_data(const std::string& dataset_name, const std::string& path,
                   const std::string& pipeline_name, const std::string& out_path) {
  const Dataset d = require_dataset(dataset_name);
  const auto pipeline = pipeline_from_string(pipeline_name);
  if (!pipeline) throw Error("unknown pipeline: " + pipeline_name + " (expected stepwise or e2e)");

  const auto instances = load_dataset(d, path);
  std::vector<json> rows;
  json inconsistent = json::array();
  for (const auto& inst : instances) {
    GoldResult result = build_gold_response(inst, *pipeline);
    if (result.instance) {
      rows.push_back(json{{"id", result.instance->id},
                          {"prompt", result.instance->prompt.text},
                          {"gold_response", result.instance->gold_response}});
    } else {
      inconsistent.push_back(json{{"id", inst.id}, {"reason", result.failure}});
    }
  }
  write_jsonl(out_path, rows);

  const json report{
      {"dataset", to_string(d)},
      {"pipeline", to_string(*pipeline)},
      {"total", instances.size()},
      {"emitted", rows.size()},
      {"inconsistent", inconsistent},
  };
  std::ofstream report_out(out_path + ".report.json", std::ios::binary);
  if (!report_out) throw IoError("cannot write " + out_path + ".report.json");
  report_out << report.dump(2) << "\n";

  std::cerr << "emitted " << rows.size() << "/" << instances.size() << " instances; "
            << inconsistent.size() << " inconsistent (see " << out_path << ".report.json)\n";
  return kExitOk;
}

int cmd_infer(const std::string& in_path, const std::string& out_path,
              const std::string& replay_path, const std::string& endpoint_env,
              const std::string& api_key_env, GenParams params, int concurrency,
              const std::string& record_path) {
  const auto rows = read_jsonl(in_path);
  std::vector<std::pair<std::string, std::string>> prompts;
  prompts.reserve(rows.size());
  for (const auto& row : rows) {
    prompts.emplace_back(row.at("id").get<std::string>(), row.at("prompt").get<std::string>());
  }

  std::unique_ptr<CompletionBackend> backend;
  if (!replay_path.empty()) {
    backend = std::make_unique<ReplayBackend>(replay_path);
  } else {
    const char* endpoint = std::getenv(endpoint_env.c_str());
    if (!endpoint || !*endpoint)
      throw Error("no replay fixture and no endpoint in $" + endpoint_env);
    const char* key = std::getenv(api_key_env.c_str());
    backend = std::make_unique<HttpBackend>(endpoint, key ? key : "");
  }

  const auto items = complete_batch(*backend, prompts, params, concurrency);

  std::vector<json> out_rows;
  std::vector<json> record_rows;
  size_t failures = 0;
  for (const auto& item : items) {
    if (const auto* ok = std::get_if<CompletionSuccess>(&item.outcome)) {
      out_rows.push_back(json{{"id", item.id}, {"response_text", ok->text}});
      if (item.record) record_rows.push_back(to_json(*item.record));
    } else {
      const auto& err = std::get<CompletionError>(item.outcome);
      out_rows.push_back(json{
          {"id", item.id},
          {"error", json{{"kind", to_string(err.kind)}, {"message", err.message}}}});
      ++failures;
    }
  }
  write_jsonl(out_path, out_rows);
  if (!record_path.empty()) write_jsonl(record_path, record_rows);

  if (!items.empty() && failures == items.size()) {
    std::cerr << "all " << failures << " requests failed\n";
    return kExitBackend;
  }
  std::cerr << (items.size() - failures) << "/" << items.size() << " completions ok\n";
  return kExitOk;
}

int cmd_eval_only(const std::string& in_path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!in_path.empty()) {
    file.open(in_path);
    if (!file) throw IoError("cannot open " + in_path);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    const std::string expr = trim(line);
    if (expr.empty()) continue;
    if (validate_equation(expr)) {
      auto v = eval_arithmetic(expr);
      if (std::holds_alternative<Rational>(v)) {
        std::cout << to_canonical_string(round_half_even(std::get<Rational>(v), 4)) << "\n";
      } else {
        std::cout << "ERROR: " << std::get<EvalError>(v).message << "\n";
      }
    } else {
      auto c = eval_comparison(expr);
      if (std::holds_alternative<bool>(c)) {
        std::cout << (std::get<bool>(c) ? "yes" : "no") << "\n";
      } else {
        std::cout << "ERROR: " << std::get<EvalError>(c).message << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_execute(const std::string& in_path, const std::string& schema_name,
                const std::string& out_path) {
  TraceSchema schema;
  if (schema_name == "three_step") schema = TraceSchema::three_step;
  else if (schema_name == "five_step") schema = TraceSchema::five_step;
  else throw Error("unknown schema: " + schema_name + " (expected three_step or five_step)");

  const auto rows = read_jsonl(in_path);
  std::vector<json> out_rows;
  for (const auto& row : rows) {
    const std::string id = row.at("id").get<std::string>();
    if (!row.contains("response_text")) {
      out_rows.push_back(json{{"id", id}, {"error", "missing_response"}});
      continue;
    }
    const auto parsed = parse_prediction(row.at("response_text").get<std::string>(), schema);
    if (!parsed.prediction) {
      out_rows.push_back(json{{"id", id}, {"error", "unparseable"},
                              {"parse_flags", parsed.flags}});
      continue;
    }
    const FinalAnswer final = execute(*parsed.prediction);
    out_rows.push_back(json{
        {"id", id},
        {"prediction", to_json(*parsed.prediction)},
        {"parse_flags", parsed.flags},
        {"final_answer", to_json(final.value)},
        {"branch", to_string(final.branch)},
        {"flags", final.flags},
    });
  }
  write_jsonl(out_path, out_rows);
  return kExitOk;
}

std::map<std::string, QAInstance> gold_index(Dataset d, const std::string& gold_path) {
  std::map<std::string, QAInstance> index;
  for (auto& inst : load_dataset(d, gold_path)) index.emplace(inst.id, std::move(inst));
  return index;
}

std::vector<EvalRecord> join_records(const std::vector<json>& pred_rows,
                                     const std::map<std::string, QAInstance>& gold) {
  std::vector<EvalRecord> records;
  records.reserve(pred_rows.size());
  for (const auto& row : pred_rows) {
    const std::string id = row.at("id").get<std::string>();
    auto it = gold.find(id);
    if (it == gold.end())
      throw SchemaError(id, "id", "prediction id " + id + " not present in the gold file");
    EvalRecord rec;
    rec.id = id;
    rec.gold = it->second.gold_answer;
    rec.gold_scale = it->second.gold_scale;
    rec.gold_type = it->second.gold_question_type;
    if (row.contains("final_answer")) {
      rec.pred = answer_value_from_json(row.at("final_answer"));
      if (row.contains("prediction")) {
        const Prediction p = prediction_from_json(row.at("prediction"));
        rec.pred_scale = p.scale;
      }
    } else {
      rec.pred = AnswerValue::text("");  // unparseable record scores zero
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void print_report(const EvalReport& report) {
  std::cout << std::fixed << std::setprecision(4);
  std::cout << "n          " << report.n << "\n";
  std::cout << "scale_mode " << to_string(report.scale_mode) << "\n";
  std::cout << "em         " << report.em << "\n";
  std::cout << "f1         " << report.f1 << "\n";
  for (const auto& [key, slot] : report.per_type) {
    std::cout << "  " << std::left << std::setw(11) << key << std::right << " em " << slot.em
              << "  f1 " << slot.f1 << "  n " << slot.count << "\n";
  }
}

int cmd_evaluate(const std::string& pred_path, const std::string& gold_path,
                 const std::string& dataset_name, const std::string& mode_name,
                 const std::string& out_path) {
  const Dataset d = require_dataset(dataset_name);
  const auto mode = scale_mode_from_string(mode_name);
  if (!mode) throw Error("unknown scale mode: " + mode_name + " (expected strict or ignore)");

  const auto gold = gold_index(d, gold_path);
  const auto records = join_records(read_jsonl(pred_path), gold);
  const EvalReport report = evaluate_split(records, *mode);
  print_report(report);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + out_path);
    out << to_json(report).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_analyze(const std::string& pred_path, const std::string& gold_path,
                const std::string& dataset_name, const std::string& out_path,
                int max_examples) {
  const Dataset d = require_dataset(dataset_name);
  const auto gold = gold_index(d, gold_path);
  const auto pred_rows = read_jsonl(pred_path);

  std::map<std::string, size_t> counts;
  size_t unclassifiable = 0;
  size_t no_gold_trace = 0;
  size_t errors_total = 0;
  std::map<std::string, std::vector<json>> examples;

  for (const auto& row : pred_rows) {
    const std::string id = row.at("id").get<std::string>();
    auto it = gold.find(id);
    if (it == gold.end())
      throw SchemaError(id, "id", "prediction id " + id + " not present in the gold file");
    const QAInstance& inst = it->second;

    Prediction pred;
    if (row.contains("prediction")) pred = prediction_from_json(row.at("prediction"));
    AnswerValue answer = AnswerValue::text("");
    if (row.contains("final_answer")) answer = answer_value_from_json(row.at("final_answer"));

    if (exact_match(answer, pred.scale, inst.gold_answer, inst.gold_scale, ScaleMode::strict))
      continue;  // only incorrect predictions are categorized
    ++errors_total;

    GoldResult gold_trace = build_gold_response(inst, PipelineKind::stepwise);
    if (!gold_trace.instance || !gold_trace.instance->trace) {
      ++no_gold_trace;
      continue;
    }
    const auto category = categorize_error(pred, *gold_trace.instance->trace);
    if (!category) {
      ++unclassifiable;
      continue;
    }
    const std::string key = to_string(category->kind);
    ++counts[key];
    if (static_cast<int>(examples[key].size()) < max_examples) {
      const StepTrace& trace = *gold_trace.instance->trace;
      const bool five = trace.schema == TraceSchema::five_step;
      examples[key].push_back(json{
          {"id", id},
          {"question", inst.question},
          {"gold_evidence", trace.at(five ? 2 : 1)},
          {"pred_evidence", pred.evidence},
          {"gold_equation", trace.at(five ? 3 : 2)},
          {"pred_equation", pred.equation},
      });
    }
  }

  json out{
      {"errors", errors_total},
      {"categories", counts},
      {"unclassifiable", unclassifiable},
      {"no_gold_trace", no_gold_trace},
      {"examples", examples},
  };
  std::cout << "errors " << errors_total << "\n";
  for (const auto& [key, count] : counts) {
    std::cout << "  " << std::left << std::setw(20) << key << std::right << " "
              << count << "\n";
  }
  std::cout << "  " << std::left << std::setw(20) << "unclassifiable" << std::right << " "
            << unclassifiable << "\n";
  if (no_gold_trace)
    std::cout << "  " << std::left << std::setw(20) << "no_gold_trace" << std::right << " "
              << no_gold_trace << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw IoError("cannot write " + out_path);
    f << out.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Step-wise pipeline toolkit for discrete reasoning over tabular and textual QA"};
  app.require_subcommand(1);
  app.set_config("--config");

  // ingest-stats
  std::string is_dataset, is_path, is_split;
  auto* ingest = app.add_subcommand("ingest-stats", "Load a dataset file and print split counts");
  ingest->add_option("--dataset", is_dataset, "finqa | tatqa | tatdqa")->required();
  ingest->add_option("--path", is_path, "dataset JSON file")->required();
  ingest->add_option("--split", is_split, "split label (default: inferred from filename)");

  // build-data
  std::string bd_dataset, bd_path, bd_pipeline = "stepwise", bd_out;
  auto* build = app.add_subcommand("build-data", "Construct training data with gold responses");
  build->add_option("--dataset", bd_dataset, "finqa | tatqa | tatdqa")->required();
  build->add_option("--path", bd_path, "dataset JSON file")->required();
  build->add_option("--pipeline", bd_pipeline, "stepwise | e2e");
  build->add_option("--out", bd_out, "output JSON-lines file")->required();

  // infer
  std::string in_in, in_out, in_replay, in_endpoint_env = "STEPQA_ENDPOINT",
              in_api_key_env = "STEPQA_API_KEY", in_record;
  GenParams gen;
  int in_concurrency = 1;
  auto* infer = app.add_subcommand("infer", "Run prompts through a completion backend");
  infer->add_option("--in", in_in, "prompts JSON-lines ({id, prompt})")->required();
  infer->add_option("--out", in_out, "responses JSON-lines")->required();
  infer->add_option("--replay", in_replay, "replay fixture file (offline backend)");
  infer->add_option("--endpoint-env", in_endpoint_env, "env var holding the endpoint URL");
  infer->add_option("--api-key-env", in_api_key_env, "env var holding the API key");
  infer->add_option("--model", gen.model, "model name sent to the endpoint");
  infer->add_option("--temperature", gen.temperature, "sampling temperature");
  infer->add_option("--top-p", gen.top_p, "nucleus sampling threshold");
  infer->add_option("--max-tokens", gen.max_tokens, "completion token cap");
  infer->add_option("--concurrency", in_concurrency, "max in-flight requests")
      ->check(CLI::PositiveNumber);
  infer->add_option("--record", in_record, "write completion records here");

  // execute
  std::string ex_in, ex_schema = "three_step", ex_out;
  bool ex_eval_only = false;
  auto* exec = app.add_subcommand("execute", "Parse responses and run the external executor");
  exec->add_option("--in", ex_in, "responses JSON-lines ({id, response_text})");
  exec->add_option("--schema", ex_schema, "three_step | five_step");
  exec->add_option("--out", ex_out, "final answers JSON-lines");
  exec->add_flag("--eval-only", ex_eval_only, "evaluate one expression per input line");

  // evaluate
  std::string ev_pred, ev_gold, ev_dataset, ev_mode = "strict", ev_out;
  auto* eval = app.add_subcommand("evaluate", "Score predictions against gold answers");
  eval->add_option("--pred", ev_pred, "execute output JSON-lines")->required();
  eval->add_option("--gold", ev_gold, "gold dataset JSON file")->required();
  eval->add_option("--dataset", ev_dataset, "finqa | tatqa | tatdqa")->required();
  eval->add_option("--scale-mode", ev_mode, "strict | ignore");
  eval->add_option("--out", ev_out, "write the report JSON here");

  // analyze
  std::string an_pred, an_gold, an_dataset, an_out;
  int an_examples = 3;
  auto* analyze = app.add_subcommand("analyze", "Categorize prediction errors");
  analyze->add_option("--pred", an_pred, "execute output JSON-lines")->required();
  analyze->add_option("--gold", an_gold, "gold dataset JSON file")->required();
  analyze->add_option("--dataset", an_dataset, "finqa | tatqa | tatdqa")->required();
  analyze->add_option("--out", an_out, "write category counts JSON here");
  analyze->add_option("--examples", an_examples, "max sampled exemplars per category");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ingest->parsed()) return cmd_ingest_stats(is_dataset, is_path, is_split);
    if (build->parsed()) return cmd_build_data(bd_dataset, bd_path, bd_pipeline, bd_out);
    if (infer->parsed())
      return cmd_infer(in_in, in_out, in_replay, in_endpoint_env, in_api_key_env, gen,
                       in_concurrency, in_record);
    if (exec->parsed()) {
      if (ex_eval_only) return cmd_eval_only(ex_in);
      if (ex_in.empty() || ex_out.empty())
        throw Error("execute requires --in and --out (or --eval-only)");
      return cmd_execute(ex_in, ex_schema, ex_out);
    }
    if (eval->parsed()) return cmd_evaluate(ev_pred, ev_gold, ev_dataset, ev_mode, ev_out);
    if (analyze->parsed()) return cmd_analyze(an_pred, an_gold, an_dataset, an_out, an_examples);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
