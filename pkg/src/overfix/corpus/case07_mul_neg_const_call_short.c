/*
 * mini-corpus case 07
 * shape: mul_neg_const   flow: call   type: short
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

void case07_stage_0(void)
{
    int acc = 5;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 0: %d\n", step);
}

void case07_stage_1(void)
{
    int acc = 8;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 1: %d\n", step);
}

void case07_stage_2(void)
{
    int acc = 2;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 2: %d\n", step);
}

void case07_stage_3(void)
{
    int acc = 5;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 3: %d\n", step);
}

void case07_stage_4(void)
{
    int acc = 8;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 4: %d\n", step);
}

void case07_stage_5(void)
{
    int acc = 2;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 5: %d\n", step);
}

void case07_stage_6(void)
{
    int acc = 5;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 6: %d\n", step);
}

void case07_stage_7(void)
{
    int acc = 8;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 7: %d\n", step);
}

void case07_stage_8(void)
{
    int acc = 2;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 8: %d\n", step);
}

void case07_stage_9(void)
{
    int acc = 5;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 9: %d\n", step);
}

void case07_stage_10(void)
{
    int acc = 8;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 10: %d\n", step);
}

void case07_stage_11(void)
{
    int acc = 2;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 11: %d\n", step);
}

void case07_stage_12(void)
{
    int acc = 5;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 12: %d\n", step);
}

void case07_stage_13(void)
{
    int acc = 8;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 13: %d\n", step);
}

void case07_stage_14(void)
{
    int acc = 2;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 14: %d\n", step);
}

void case07_stage_15(void)
{
    int acc = 5;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 15: %d\n", step);
}

void case07_stage_16(void)
{
    int acc = 8;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 07 stage 16: %d\n", step);
}

void case07_good_guarded(void)
{
    short data = 0;
    fscanf(stdin, "%hd", &data);
    short result = 0;
    if (data <= 13 && data >= -13) {
        result = data * -3;
        printf("%d\n", (int)result);
    }
}

void case07_good_constant(void)
{
    short data = 5;
    short result = 0;
    result = data * -3;
    printf("%d\n", (int)result);
}

void case07_good_early(void)
{
    short data = 0;
    fscanf(stdin, "%hd", &data);
    if (data > 13 || data < -13) {
        return;
    }
    short result = 0;
    result = data * -3;
    printf("%d\n", (int)result);
}

short case07_deep(short value)
{
    short result = 0;
    /* FAULT */
    result = value * -3;
    return result;
}

short case07_middle(short value)
{
    short forwarded = 0;
    forwarded = case07_deep(value);
    return forwarded;
}

void case07_bad(void)
{
    short data = 0;
    short result = 0;
    fscanf(stdin, "%hd", &data);
    result = case07_middle(data);
    printf("%d\n", (int)result);
}

int main(void)
{
    case07_stage_0();
    case07_stage_1();
    case07_stage_2();
    case07_stage_3();
    case07_stage_4();
    case07_stage_5();
    case07_stage_6();
    case07_stage_7();
    case07_stage_8();
    case07_stage_9();
    case07_stage_10();
    case07_stage_11();
    case07_stage_12();
    case07_stage_13();
    case07_stage_14();
    case07_stage_15();
    case07_stage_16();
    case07_good_guarded();
    case07_good_constant();
    case07_good_early();
    case07_bad();
    return 0;
}
