// Copyright 2026 The AMW Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "support/brute_matcher.h"

#include <set>
#include <vector>

namespace amw::testing {

bool SatisfiesPattern(const Model& model, const PatternConfiguration& pattern, const ObjectStore& store,
                      const std::map<std::string, ObjectId>& anchors,
                      const std::map<std::string, ObjectId>& mapping) {
  std::set<ObjectId> images;
  for (const auto& o : pattern.objects) {
    auto it = mapping.find(o.name);
    if (it == mapping.end()) return false;
    images.insert(it->second);
  }
  if (images.size() != pattern.objects.size()) return false;
  for (const auto& o : pattern.objects) {
    ObjectId id = mapping.at(o.name);
    auto anchor = anchors.find(o.name);
    if (anchor != anchors.end() && anchor->second != id) return false;
    const RuntimeObject* object = store.Find(id);
    if (object == nullptr || !model.IsSubclassOf(object->class_name, o.class_name)) return false;
    for (const auto& a : o.assignments) {
      auto slot = object->slots.find(a.attribute);
      if (slot == object->slots.end()) return false;
      Value expected;
      if (a.value.kind == ObjectValue::Kind::kLiteral) {
        expected = Value::FromLiteral(a.value.literal);
      } else if (a.value.kind == ObjectValue::Kind::kObject) {
        if (!mapping.count(a.value.object)) return false;
        expected = Value::Ref(mapping.at(a.value.object));
      } else {
        std::vector<ObjectId> members;
        for (const auto& name : a.value.set) {
          if (!mapping.count(name)) return false;
          members.push_back(mapping.at(name));
        }
        expected = Value::Set(members);
      }
      if (!(slot->second == expected)) return false;
    }
  }
  return true;
}

BruteMatch BruteForceMatch(const Model& model, const PatternConfiguration& pattern,
                           const ObjectStore& store, const std::map<std::string, ObjectId>& anchors) {
  BruteMatch result;
  for (const auto& o : pattern.objects) {
    if (o.anchor && !anchors.count(o.name)) {
      result.anchor_unknown = true;
      return result;
    }
  }
  std::vector<ObjectId> ids;
  for (const auto& [id, object] : store.objects()) ids.push_back(id);
  const std::size_t p = pattern.objects.size();
  if (ids.empty() && p > 0) return result;
  // Odometer over ids^p; the first digit is the most significant, so tuples
  // come out in lexicographic order.
  std::vector<std::size_t> digits(p, 0);
  while (true) {
    std::map<std::string, ObjectId> mapping;
    for (std::size_t i = 0; i < p; ++i) mapping[pattern.objects[i].name] = ids[digits[i]];
    if (SatisfiesPattern(model, pattern, store, anchors, mapping)) {
      result.witness = mapping;
      return result;
    }
    std::size_t k = p;
    while (k > 0) {
      --k;
      if (++digits[k] < ids.size()) break;
      digits[k] = 0;
      if (k == 0) return result;
    }
    if (p == 0) return result;
  }
}

}  // namespace amw::testing
