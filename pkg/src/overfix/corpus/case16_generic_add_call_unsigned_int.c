/*
 * mini-corpus case 16
 * shape: generic_add   flow: call   type: unsigned int
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

void case16_stage_0(void)
{
    int acc = 5;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 0: %d\n", step);
}

void case16_stage_1(void)
{
    int acc = 8;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 1: %d\n", step);
}

void case16_stage_2(void)
{
    int acc = 2;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 2: %d\n", step);
}

void case16_stage_3(void)
{
    int acc = 5;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 3: %d\n", step);
}

void case16_stage_4(void)
{
    int acc = 8;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 4: %d\n", step);
}

void case16_stage_5(void)
{
    int acc = 2;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 5: %d\n", step);
}

void case16_stage_6(void)
{
    int acc = 5;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 6: %d\n", step);
}

void case16_stage_7(void)
{
    int acc = 8;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 7: %d\n", step);
}

void case16_stage_8(void)
{
    int acc = 2;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 8: %d\n", step);
}

void case16_stage_9(void)
{
    int acc = 5;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 9: %d\n", step);
}

void case16_stage_10(void)
{
    int acc = 8;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 10: %d\n", step);
}

void case16_stage_11(void)
{
    int acc = 2;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 11: %d\n", step);
}

void case16_stage_12(void)
{
    int acc = 5;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 12: %d\n", step);
}

void case16_stage_13(void)
{
    int acc = 8;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 13: %d\n", step);
}

void case16_stage_14(void)
{
    int acc = 2;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 14: %d\n", step);
}

void case16_stage_15(void)
{
    int acc = 5;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 15: %d\n", step);
}

void case16_stage_16(void)
{
    int acc = 8;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 16 stage 16: %d\n", step);
}

void case16_good_guarded(void)
{
    unsigned int data = 0;
    unsigned int extra = 0;
    fscanf(stdin, "%u", &data);
    fscanf(stdin, "%u", &extra);
    unsigned int result = 0;
    if (data <= 60 && extra <= 60) {
        result = data + extra;
        printf("%u\n", result);
    }
}

void case16_good_constant(void)
{
    unsigned int data = 5;
    unsigned int extra = 4;
    unsigned int result = 0;
    result = data + extra;
    printf("%u\n", result);
}

void case16_good_early(void)
{
    unsigned int data = 0;
    unsigned int extra = 1;
    fscanf(stdin, "%u", &data);
    if (data > 60) {
        return;
    }
    unsigned int result = 0;
    result = data + extra;
    printf("%u\n", result);
}

unsigned int case16_deep(unsigned int value, unsigned int other)
{
    unsigned int result = 0;
    /* FAULT */
    result = value + other;
    return result;
}

unsigned int case16_middle(unsigned int value, unsigned int other)
{
    unsigned int forwarded = 0;
    forwarded = case16_deep(value, other);
    return forwarded;
}

void case16_bad(void)
{
    unsigned int data = 0;
    unsigned int extra = 0;
    unsigned int result = 0;
    fscanf(stdin, "%u", &data);
    fscanf(stdin, "%u", &extra);
    result = case16_middle(data, extra);
    printf("%u\n", result);
}

int main(void)
{
    case16_stage_0();
    case16_stage_1();
    case16_stage_2();
    case16_stage_3();
    case16_stage_4();
    case16_stage_5();
    case16_stage_6();
    case16_stage_7();
    case16_stage_8();
    case16_stage_9();
    case16_stage_10();
    case16_stage_11();
    case16_stage_12();
    case16_stage_13();
    case16_stage_14();
    case16_stage_15();
    case16_stage_16();
    case16_good_guarded();
    case16_good_constant();
    case16_good_early();
    case16_bad();
    return 0;
}
