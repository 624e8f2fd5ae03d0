#pragma once

#include "caoli/scheme.hpp"

#include <iosfwd>
#include <string>

namespace caoli::keyfile {

// Versioned plain-text key formats, all integers in decimal.
//
// Public key:            Private key:
//   caoli-pub v1           caoli-priv v1
//   n d                    n d
//   n rows of B            the n primes on one line
//                          n full rows of P1 (zeros included)
//                          n full rows of P2
//
// Parsing is strict: wrong token counts, forbidden negative entries, an
// asymmetric B or invalid key material are rejected with a ParseError that
// names the offending line.

void write_public(std::ostream& out, const PublicKey& pk);
void write_private(std::ostream& out, const PrivateKey& sk);

PublicKey read_public(std::istream& in);
PrivateKey read_private(std::istream& in);

// Path helpers; I/O failures raise Error with the path in the message.
void save_public(const std::string& path, const PublicKey& pk);
void save_private(const std::string& path, const PrivateKey& sk);
PublicKey load_public(const std::string& path);
PrivateKey load_private(const std::string& path);

}  // namespace caoli::keyfile
