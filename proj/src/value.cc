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

#include "amw/value.h"

#include <algorithm>

namespace amw {

Value Value::Set(std::vector<ObjectId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return Value(Kind::kSet, std::move(ids));
}

Value Value::FromLiteral(const Literal& literal) {
  switch (literal.kind) {
    case Literal::Kind::kInt:
      return Int(literal.int_value);
    case Literal::Kind::kBool:
      return Bool(literal.bool_value);
    case Literal::Kind::kString:
      return String(literal.string_value);
  }
  return Undefined();
}

Value Value::Default(const TypeRef& type) {
  switch (type.kind) {
    case TypeRef::Kind::kInt:
      return Int(0);
    case TypeRef::Kind::kBool:
      return Bool(false);
    case TypeRef::Kind::kString:
      return String("");
    case TypeRef::Kind::kClass:
      return Undefined();
    case TypeRef::Kind::kSet:
      return Set({});
  }
  return Undefined();
}

std::string Value::ToString() const {
  switch (kind_) {
    case Kind::kUndefined:
      return "undefined";
    case Kind::kInt:
      return std::to_string(as_int());
    case Kind::kBool:
      return as_bool() ? "true" : "false";
    case Kind::kString:
      return Literal::String(as_string()).ToString();
    case Kind::kRef:
      return "#" + std::to_string(as_ref());
    case Kind::kSet: {
      std::string out = "{";
      for (std::size_t i = 0; i < as_set().size(); ++i) {
        if (i > 0) out += ", ";
        out += "#" + std::to_string(as_set()[i]);
      }
      return out + "}";
    }
  }
  return "undefined";
}

std::string_view ValueKindName(Value::Kind kind) {
  switch (kind) {
    case Value::Kind::kUndefined:
      return "undefined";
    case Value::Kind::kInt:
      return "Int";
    case Value::Kind::kBool:
      return "Bool";
    case Value::Kind::kString:
      return "String";
    case Value::Kind::kRef:
      return "object";
    case Value::Kind::kSet:
      return "set";
  }
  return "?";
}

ObjectId ObjectStore::Create(const Model& model, const std::string& class_name) {
  if (model.FindClass(class_name) == nullptr) {
    throw Error("E_UNKNOWN_CLASS", "unknown class '" + class_name + "'");
  }
  RuntimeObject object;
  object.id = next_id_++;
  object.class_name = class_name;
  for (const AttributeDef* attr : model.AllAttributes(class_name)) {
    object.slots.emplace(attr->name, Value::Default(attr->type));
  }
  if (const Statechart* chart = model.StatechartFor(class_name)) object.state = chart->initial;
  ObjectId id = object.id;
  objects_.emplace(id, std::move(object));
  return id;
}

const RuntimeObject* ObjectStore::Find(ObjectId id) const {
  auto it = objects_.find(id);
  return it == objects_.end() ? nullptr : &it->second;
}

RuntimeObject* ObjectStore::Find(ObjectId id) {
  auto it = objects_.find(id);
  return it == objects_.end() ? nullptr : &it->second;
}

std::optional<ObjectId> ObjectStore::Lookup(const std::string& name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

std::string ObjectStore::DisplayName(ObjectId id) const {
  for (const auto& [name, object] : name_index_) {
    if (object == id) return name;
  }
  return "#" + std::to_string(id);
}

std::string ObjectStore::Render() const {
  std::string out;
  for (const auto& [id, object] : objects_) {
    out += "#" + std::to_string(id) + " " + object.class_name;
    if (object.state) out += " [" + *object.state + "]";
    for (const auto& [name, value] : object.slots) out += " " + name + "=" + value.ToString();
    out += '\n';
  }
  return out;
}

}  // namespace amw
