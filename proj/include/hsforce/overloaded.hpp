//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_OVERLOADED_HPP_
#define HSFORCE_OVERLOADED_HPP_

namespace hsforce {

template <class... Ts>
struct overloaded: Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace hsforce

#endif  // HSFORCE_OVERLOADED_HPP_
