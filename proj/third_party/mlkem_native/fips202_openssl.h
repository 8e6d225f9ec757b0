/* FIPS 202 backend for the vendored mlkem-native sources, implemented on top
 * of OpenSSL's EVP one-shot SHA-3/SHAKE.
 *
 * OpenSSL 3.0 has no incremental XOF squeeze, so the SHAKE-128 context keeps
 * the absorbed input (at most MLKEM_SYMBYTES + 2 bytes: seed || j || i) and
 * every squeezeblocks call re-runs the XOF from the start for the longer
 * prefix, copying out the new tail.  Quadratic in squeezed blocks, which is
 * bounded by rejection sampling and irrelevant at these sizes. */
#ifndef HPQC_FIPS202_OPENSSL_H
#define HPQC_FIPS202_OPENSSL_H

#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>
#include <string.h>
#include <openssl/evp.h>

#define SHAKE128_RATE 168
#define SHAKE256_RATE 136

/* 64 rate blocks ≈ 10 KiB; rejection sampling for one polynomial needs 3-4
 * blocks in expectation and overshooting this bound has negligible
 * probability (it would mean >85% of ~3500 samples rejected at rate 19%). */
#define MLK_SHIM_MAX_SQUEEZE (64 * SHAKE128_RATE)
#define MLK_SHIM_MAX_INPUT 64

typedef struct
{
  uint8_t input[MLK_SHIM_MAX_INPUT];
  size_t input_len;
  size_t squeezed;
} mlk_shake128ctx;

static MLK_INLINE void mlk_shim_xof(const EVP_MD *md, uint8_t *out,
                                    size_t outlen, const uint8_t *in,
                                    size_t inlen)
{
  EVP_MD_CTX *ctx = EVP_MD_CTX_new();
  if (ctx == NULL || EVP_DigestInit_ex(ctx, md, NULL) != 1 ||
      EVP_DigestUpdate(ctx, in, inlen) != 1 ||
      EVP_DigestFinalXOF(ctx, out, outlen) != 1)
  {
    abort();
  }
  EVP_MD_CTX_free(ctx);
}

static MLK_INLINE void mlk_shake128_init(mlk_shake128ctx *state)
{
  state->input_len = 0;
  state->squeezed = 0;
}

static MLK_INLINE void mlk_shake128_release(mlk_shake128ctx *state)
{
  (void)state;
}

static MLK_INLINE void mlk_shake128_absorb_once(mlk_shake128ctx *state,
                                                const uint8_t *input,
                                                size_t inlen)
{
  if (inlen > MLK_SHIM_MAX_INPUT)
  {
    abort();
  }
  memcpy(state->input, input, inlen);
  state->input_len = inlen;
  state->squeezed = 0;
}

static MLK_INLINE void mlk_shake128_squeezeblocks(uint8_t *output,
                                                  size_t nblocks,
                                                  mlk_shake128ctx *state)
{
  uint8_t tmp[MLK_SHIM_MAX_SQUEEZE];
  size_t need = state->squeezed + nblocks * SHAKE128_RATE;
  if (need > MLK_SHIM_MAX_SQUEEZE)
  {
    abort();
  }
  mlk_shim_xof(EVP_shake128(), tmp, need, state->input, state->input_len);
  memcpy(output, tmp + state->squeezed, nblocks * SHAKE128_RATE);
  state->squeezed = need;
}

static MLK_INLINE void mlk_shake256(uint8_t *output, size_t outlen,
                                    const uint8_t *input, size_t inlen)
{
  mlk_shim_xof(EVP_shake256(), output, outlen, input, inlen);
}

static MLK_INLINE void mlk_sha3_256(uint8_t *output, const uint8_t *input,
                                    size_t inlen)
{
  unsigned int len = 32;
  if (EVP_Digest(input, inlen, output, &len, EVP_sha3_256(), NULL) != 1)
  {
    abort();
  }
}

static MLK_INLINE void mlk_sha3_512(uint8_t *output, const uint8_t *input,
                                    size_t inlen)
{
  unsigned int len = 64;
  if (EVP_Digest(input, inlen, output, &len, EVP_sha3_512(), NULL) != 1)
  {
    abort();
  }
}

#endif /* HPQC_FIPS202_OPENSSL_H */
