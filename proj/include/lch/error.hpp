#pragma once
#include <stdexcept>
#include <string>

namespace lch {

// kind is a short stable tag ("syntax", "budget", ...); the message is free text
struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

}  // namespace lch
