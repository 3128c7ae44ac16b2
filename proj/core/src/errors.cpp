#include "bubble/errors.hpp"

namespace bubble {

TrainingError::TrainingError(int epoch, const std::string& what)
    : std::runtime_error("epoch " + std::to_string(epoch) + ": " + what), epoch_(epoch) {}

}  // namespace bubble
