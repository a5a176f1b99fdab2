#ifndef CONJPOLY_ERRORS_HPP
#define CONJPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conjpoly {

// Thrown when the precision ladder is exhausted before a required
// comparison or enclosure could be certified.
class CertificationError : public std::runtime_error {
public:
    explicit CertificationError(const std::string& what, long bits = 0, int index = -1)
        : std::runtime_error(what), precision_bits(bits), blocking_index(index) {}

    long precision_bits;
    int blocking_index;
};

}  // namespace conjpoly

#endif
