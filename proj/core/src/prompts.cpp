#include "stepqa/prompts.hpp"

#include "stepqa/errors.hpp"
#include "stepqa/markdown.hpp"

namespace stepqa {

namespace {

std::string table_slot(const QAInstance& inst) {
  if (inst.dataset == Dataset::tatdqa) return {};
  if (!inst.table) throw MissingTableError(inst.id);
  return render_markdown_table(*inst.table);
}

}  // namespace

std::string joined_texts(const QAInstance& inst) {
  std::string out;
  for (size_t i = 0; i < inst.texts.size(); ++i) {
    if (i) out += '\n';
    out += inst.texts[i];
  }
  return out;
}

PromptText build_stepwise_prompt(const QAInstance& inst) {
  PromptText p;
  p.dataset = inst.dataset;
  p.schema = inst.dataset == Dataset::finqa ? PromptSchema::three_step : PromptSchema::five_step;
  p.text = templates::stepwise_prompt(inst.dataset, table_slot(inst), joined_texts(inst),
                                      inst.question);
  return p;
}

PromptText build_e2e_prompt(const QAInstance& inst) {
  PromptText p;
  p.dataset = inst.dataset;
  p.schema = PromptSchema::e2e;
  p.text = templates::e2e_prompt(inst.dataset, table_slot(inst), joined_texts(inst),
                                 inst.question);
  return p;
}

PromptText build_zero_shot_prompt(const QAInstance& inst, bool cot) {
  PromptText p;
  p.dataset = inst.dataset;
  p.schema = PromptSchema::e2e;
  p.text = templates::zero_shot_prompt(inst.dataset, cot, table_slot(inst), joined_texts(inst),
                                       inst.question);
  return p;
}

}  // namespace stepqa
