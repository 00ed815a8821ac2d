#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace appnorm {

// Structured failure carrying a stable machine-readable code plus named
// details; the CLI renders these as JSON diagnostics on exit code 2.
class failure : public std::runtime_error {
public:
    failure(std::string code, std::map<std::string, std::string> details = {})
        : std::runtime_error(render(code, details)),
          code_(std::move(code)),
          details_(std::move(details)) {}

    const std::string& code() const { return code_; }
    const std::map<std::string, std::string>& details() const { return details_; }

private:
    static std::string render(const std::string& code,
                              const std::map<std::string, std::string>& details) {
        std::string msg = code;
        for (const auto& [k, v] : details) {
            msg += " " + k + "=" + v;
        }
        return msg;
    }

    std::string code_;
    std::map<std::string, std::string> details_;
};

}  // namespace appnorm
