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

// Runtime values and the object store they live in.

#ifndef AMW_VALUE_H_
#define AMW_VALUE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "amw/model.h"

namespace amw {

using ObjectId = std::int64_t;

// Caller id of stimuli issued by a test driver. Never a store id.
inline constexpr ObjectId kDriver = 0;

class Value {
 public:
  enum class Kind { kUndefined, kInt, kBool, kString, kRef, kSet };

  Value() = default;  // undefined

  static Value Undefined() { return Value(); }
  static Value Int(std::int64_t v) { return Value(Kind::kInt, v); }
  static Value Bool(bool v) { return Value(Kind::kBool, v); }
  static Value String(std::string v) { return Value(Kind::kString, std::move(v)); }
  static Value Ref(ObjectId id) { return Value(Kind::kRef, RefBox{id}); }
  // Sorts and removes duplicates.
  static Value Set(std::vector<ObjectId> ids);

  static Value FromLiteral(const Literal& literal);
  // 0, false, "", undefined or the empty set.
  static Value Default(const TypeRef& type);

  Kind kind() const { return kind_; }
  bool is_undefined() const { return kind_ == Kind::kUndefined; }

  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  bool as_bool() const { return std::get<bool>(data_); }
  const std::string& as_string() const { return std::get<std::string>(data_); }
  ObjectId as_ref() const { return std::get<RefBox>(data_).id; }
  const std::vector<ObjectId>& as_set() const { return std::get<std::vector<ObjectId>>(data_); }

  // Strings quoted and escaped, references as #id, sets as {#1, #2}.
  std::string ToString() const;

  bool operator==(const Value& other) const {
    return kind_ == other.kind_ && data_ == other.data_;
  }

 private:
  struct RefBox {
    ObjectId id;
    bool operator==(const RefBox&) const = default;
  };
  using Data =
      std::variant<std::monostate, std::int64_t, bool, std::string, RefBox, std::vector<ObjectId>>;

  template <typename T>
  Value(Kind kind, T&& v) : kind_(kind), data_(std::forward<T>(v)) {}

  Kind kind_ = Kind::kUndefined;
  Data data_;
};

std::string_view ValueKindName(Value::Kind kind);

struct RuntimeObject {
  ObjectId id = 0;
  std::string class_name;
  std::map<std::string, Value> slots;
  std::optional<std::string> state;

  bool operator==(const RuntimeObject&) const = default;
};

class ObjectStore {
 public:
  // Creates an object of `class_name` with every visible attribute set to its
  // type default and, when a statechart governs the class, in its initial
  // state. Throws Error(E_UNKNOWN_CLASS).
  ObjectId Create(const Model& model, const std::string& class_name);

  const RuntimeObject* Find(ObjectId id) const;
  RuntimeObject* Find(ObjectId id);

  const std::map<ObjectId, RuntimeObject>& objects() const { return objects_; }
  const std::map<std::string, ObjectId>& name_index() const { return name_index_; }
  void Name(const std::string& name, ObjectId id) { name_index_[name] = id; }
  std::optional<ObjectId> Lookup(const std::string& name) const;
  // Fixture name of `id`, or "#id" when it has none.
  std::string DisplayName(ObjectId id) const;

  // One line per object, ascending id: `#1 Guest [LoggedOut] name="" passwd="x"`.
  std::string Render() const;

  bool operator==(const ObjectStore&) const = default;

 private:
  std::map<ObjectId, RuntimeObject> objects_;
  ObjectId next_id_ = 1;
  std::map<std::string, ObjectId> name_index_;
};

}  // namespace amw

#endif  // AMW_VALUE_H_
