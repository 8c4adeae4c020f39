// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace volform {

/// Format a double with 17 significant digits so the decimal text
/// round-trips to the identical bit pattern. Infinities and NaN become
/// the strings "inf"/"-inf"/"nan" (quoted when emitted as JSON).
std::string format_double(double v);

/// Minimal streaming JSON writer with caller-controlled key order and
/// format_double for all floating-point values. Reports must be bytewise
/// reproducible, so serialization stays fully in our hands.
class JsonWriter {
  public:
    std::string str() const { return out_; }

    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(const std::string& name);

    void value(double v);
    void value(int v);
    void value(std::int64_t v);
    void value(std::uint64_t v);
    void value(bool v);
    void value(const std::string& v);
    void value(const char* v) { value(std::string(v)); }

    template <typename T>
    void kv(const std::string& name, const T& v) {
        key(name);
        value(v);
    }

  private:
    void comma();
    void escape(const std::string& s);

    std::string out_;
    std::vector<bool> need_comma_;
};

}  // namespace volform
