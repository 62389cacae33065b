/*
 * mini-corpus case 11
 * shape: mul_equal   flow: call   type: int64_t
 *
 * One genuine overflow site is annotated below; the tainted value travels through a helper call chain.
 * The good_* twins apply range guards or constant inputs and must
 * never be reported.  All literals stay inside the 8-bit analog
 * domain so verdicts agree across solver backends.
 *
 * Derived from the flow-variant structure of public CWE-190 test
 * suites; rewritten for the supported language subset.
 */
#include <stdio.h>
#include <stdlib.h>
#include <limits.h>
#include <stdint.h>
#include <math.h>

void case11_stage_0(void)
{
    int acc = 6;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 0: %d\n", step);
}

void case11_stage_1(void)
{
    int acc = 9;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 1: %d\n", step);
}

void case11_stage_2(void)
{
    int acc = 3;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 2: %d\n", step);
}

void case11_stage_3(void)
{
    int acc = 6;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 3: %d\n", step);
}

void case11_stage_4(void)
{
    int acc = 9;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 4: %d\n", step);
}

void case11_stage_5(void)
{
    int acc = 3;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 5: %d\n", step);
}

void case11_stage_6(void)
{
    int acc = 6;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 6: %d\n", step);
}

void case11_stage_7(void)
{
    int acc = 9;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 7: %d\n", step);
}

void case11_stage_8(void)
{
    int acc = 3;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 8: %d\n", step);
}

void case11_stage_9(void)
{
    int acc = 6;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 9: %d\n", step);
}

void case11_stage_10(void)
{
    int acc = 9;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 10: %d\n", step);
}

void case11_stage_11(void)
{
    int acc = 3;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 11: %d\n", step);
}

void case11_stage_12(void)
{
    int acc = 6;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 12: %d\n", step);
}

void case11_stage_13(void)
{
    int acc = 9;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 13: %d\n", step);
}

void case11_stage_14(void)
{
    int acc = 3;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 14: %d\n", step);
}

void case11_stage_15(void)
{
    int acc = 6;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 15: %d\n", step);
}

void case11_stage_16(void)
{
    int acc = 9;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 11 stage 16: %d\n", step);
}

void case11_good_guarded(void)
{
    int64_t data = 0;
    fscanf(stdin, "%lld", &data);
    int64_t result = 0;
    if (data <= 11 && data >= -11) {
        result = data * data;
        printf("%d\n", (int)result);
    }
}

void case11_good_constant(void)
{
    int64_t data = 5;
    int64_t result = 0;
    result = data * data;
    printf("%d\n", (int)result);
}

void case11_good_early(void)
{
    int64_t data = 0;
    fscanf(stdin, "%lld", &data);
    if (data > 11 || data < -11) {
        return;
    }
    int64_t result = 0;
    result = data * data;
    printf("%d\n", (int)result);
}

int64_t case11_deep(int64_t value)
{
    int64_t result = 0;
    /* FAULT */
    result = value * value;
    return result;
}

int64_t case11_middle(int64_t value)
{
    int64_t forwarded = 0;
    forwarded = case11_deep(value);
    return forwarded;
}

void case11_bad(void)
{
    int64_t data = 0;
    int64_t result = 0;
    fscanf(stdin, "%lld", &data);
    result = case11_middle(data);
    printf("%d\n", (int)result);
}

int main(void)
{
    case11_stage_0();
    case11_stage_1();
    case11_stage_2();
    case11_stage_3();
    case11_stage_4();
    case11_stage_5();
    case11_stage_6();
    case11_stage_7();
    case11_stage_8();
    case11_stage_9();
    case11_stage_10();
    case11_stage_11();
    case11_stage_12();
    case11_stage_13();
    case11_stage_14();
    case11_stage_15();
    case11_stage_16();
    case11_good_guarded();
    case11_good_constant();
    case11_good_early();
    case11_bad();
    return 0;
}
