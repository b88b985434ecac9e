#include <benchmark/benchmark.h>

#include "stepqa/equation.hpp"
#include "stepqa/executor.hpp"
#include "stepqa/markdown.hpp"
#include "stepqa/metrics.hpp"
#include "stepqa/response.hpp"

using namespace stepqa;

static void BM_EvalArithmetic(benchmark::State& state) {
  const std::string expr = "((950.4 + 957.4 + 769.1) / 3) * (1,000 - 5%) / (201 - 125)";
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_arithmetic(expr));
  }
}
BENCHMARK(BM_EvalArithmetic);

static void BM_ParsePrediction(benchmark::State& state) {
  const std::string response =
      "Working through the steps.\n"
      "| step | output |\n"
      "| 1 | Arithmetic |\n"
      "| 2 | 2,616 # 2,478 |\n"
      "| 3 | (2,616 - 2,478) / 2,478 |\n"
      "| 4 | 5.57 |\n"
      "| 5 | percent |\n"
      "The answer is: 5.57 #### and its corresponding scale is: percent";
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_prediction(response, TraceSchema::five_step));
  }
}
BENCHMARK(BM_ParsePrediction);

static void BM_Execute(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        execute("201 # 125", "(201 - 125) / 125", "0.61", QuestionType::arithmetic));
  }
}
BENCHMARK(BM_Execute);

static void BM_RenderMarkdownTable(benchmark::State& state) {
  Table t;
  t.rows.push_back({"Segment", "2019", "2018", "2017"});
  for (int i = 0; i < 30; ++i) {
    t.rows.push_back({"row " + std::to_string(i), "45.2", "40.1", "38.7"});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_markdown_table(t));
  }
}
BENCHMARK(BM_RenderMarkdownTable);

static void BM_NumeracyF1(benchmark::State& state) {
  const AnswerValue pred = AnswerValue::spans({"net revenue", "operating income", "4.7"});
  const AnswerValue gold = AnswerValue::spans({"total net revenue", "4.7", "operating income"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeracy_f1(pred, gold));
  }
}
BENCHMARK(BM_NumeracyF1);
