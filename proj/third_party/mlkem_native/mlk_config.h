/* Build configuration for the vendored mlkem-native sources (ML-KEM-768,
 * portable C only).  FIPS 202 is supplied by fips202_openssl.h. */
#ifndef HPQC_MLK_CONFIG_H
#define HPQC_MLK_CONFIG_H

#define MLK_CONFIG_PARAMETER_SET 768
#define MLK_CONFIG_NAMESPACE_PREFIX mlkem768

#define MLK_CONFIG_FIPS202_CUSTOM_HEADER "../fips202_openssl.h"
#define MLK_CONFIG_SERIAL_FIPS202_ONLY

/* Randomness is always passed in explicitly through the *_derand API. */
#define MLK_CONFIG_NO_RANDOMIZED_API

#define MLK_CONFIG_NO_ASM

#define MLK_CONFIG_CUSTOM_ZEROIZE
#if !defined(__ASSEMBLER__)
#include <stdint.h>
#include <openssl/crypto.h>
#include "mlkem/sys.h"
static MLK_INLINE void mlk_zeroize(void *ptr, size_t len)
{
  OPENSSL_cleanse(ptr, len);
}
#endif

#endif /* HPQC_MLK_CONFIG_H */

