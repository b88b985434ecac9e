#pragma once

#include <string>
#include <vector>

#include "stepqa/types.hpp"

namespace stepqa {

struct SplitStats {
  Dataset dataset = Dataset::finqa;
  std::string split;  // train / dev / test
  size_t count = 0;
};

// Loaders for the released JSON files; one QAInstance per question. The
// exact field names of each release are an external contract documented in
// docs/data-formats.md; structural violations raise SchemaError with the
// record id and field name. Loading is deterministic.
std::vector<QAInstance> load_finqa(const std::string& path);
std::vector<QAInstance> load_tatqa(const std::string& path);
std::vector<QAInstance> load_tatdqa(const std::string& path);

// Parse from an in-memory JSON document (the path loaders delegate here).
std::vector<QAInstance> load_finqa_json(const std::string& content);
std::vector<QAInstance> load_tatqa_json(const std::string& content);
std::vector<QAInstance> load_tatdqa_json(const std::string& content);

std::vector<QAInstance> load_dataset(Dataset d, const std::string& path);

SplitStats stats(Dataset d, const std::string& split, const std::vector<QAInstance>& instances);

// Documented schema contract identifier carried by each loader.
std::string schema_version(Dataset d);

}  // namespace stepqa
