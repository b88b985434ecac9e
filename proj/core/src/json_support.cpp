#include "stepqa/json_support.hpp"

#include <fstream>

#include "stepqa/errors.hpp"

namespace stepqa {

using nlohmann::json;

json to_json(const AnswerValue& v) {
  switch (v.kind()) {
    case AnswerValue::Kind::number:
      return json{{"kind", "number"}, {"value", to_canonical_string(v.as_number())}};
    case AnswerValue::Kind::text:
      return json{{"kind", "text"}, {"value", v.as_text()}};
    case AnswerValue::Kind::spans:
      return json{{"kind", "spans"}, {"value", v.as_spans()}};
    case AnswerValue::Kind::boolean:
      return json{{"kind", "boolean"}, {"value", v.as_boolean()}};
  }
  return json{{"kind", "text"}, {"value", ""}};
}

AnswerValue answer_value_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "number") {
    auto parsed = parse_decimal(j.at("value").get<std::string>());
    if (!parsed) throw IoError("bad number in answer value: " + j.dump());
    return AnswerValue::number(parsed->value);
  }
  if (kind == "text") return AnswerValue::text(j.at("value").get<std::string>());
  if (kind == "spans") return AnswerValue::spans(j.at("value").get<std::vector<std::string>>());
  if (kind == "boolean") return AnswerValue::boolean(j.at("value").get<bool>());
  throw IoError("unknown answer value kind: " + kind);
}

json to_json(const Prediction& p) {
  json j{
      {"evidence", p.evidence},
      {"equation", p.equation},
      {"raw_answer", p.raw_answer},
      {"final_answer", to_json(p.final_answer)},
  };
  if (p.question_type) j["question_type"] = to_string(*p.question_type);
  if (p.scale) j["scale"] = render_scale(*p.scale);
  return j;
}

Prediction prediction_from_json(const json& j) {
  Prediction p;
  p.evidence = j.value("evidence", "");
  p.equation = j.value("equation", "");
  p.raw_answer = j.value("raw_answer", "");
  if (j.contains("final_answer")) p.final_answer = answer_value_from_json(j.at("final_answer"));
  if (j.contains("question_type"))
    p.question_type = try_question_type_parse(j.at("question_type").get<std::string>());
  if (j.contains("scale")) p.scale = try_scale_parse(j.at("scale").get<std::string>());
  return p;
}

json to_json(const FinalAnswer& f) {
  return json{
      {"value", to_json(f.value)},
      {"branch", to_string(f.branch)},
      {"flags", f.flags},
  };
}

json to_json(const EvalReport& r) {
  json per_type = json::object();
  for (const auto& [key, slot] : r.per_type) {
    per_type[key] = json{{"em", slot.em}, {"f1", slot.f1}, {"count", slot.count}};
  }
  return json{
      {"n", r.n},
      {"em", r.em},
      {"f1", r.f1},
      {"scale_mode", to_string(r.scale_mode)},
      {"per_type", per_type},
  };
}

json to_json(const CompletionRecord& r) {
  return json{
      {"instance_id", r.instance_id},
      {"prompt_sha256", r.prompt_sha256},
      {"response_text", r.response_text},
      {"backend_id", r.backend_id},
      {"latency_ms", r.latency_ms},
      {"retries", r.retries},
  };
}

CompletionRecord completion_record_from_json(const json& j) {
  CompletionRecord r;
  r.instance_id = j.value("instance_id", "");
  r.prompt_sha256 = j.value("prompt_sha256", "");
  r.response_text = j.value("response_text", "");
  r.backend_id = j.value("backend_id", "");
  r.latency_ms = j.value("latency_ms", 0L);
  r.retries = j.value("retries", 0);
  return r;
}

std::vector<json> read_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<json> rows;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rows.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw IoError(path + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

void write_jsonl(const std::string& path, const std::vector<json>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  for (const auto& row : rows) {
    out << row.dump() << '\n';
  }
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace stepqa
