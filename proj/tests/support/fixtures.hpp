// Copyright 2026 The mathprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Hand-checked reference conversations. Every string below was transcribed
// from real gpt-3.5-turbo transcripts and frozen; the golden tests require
// the renderers to reproduce the prompt side byte for byte and the extractor
// and metrics to reproduce the scored side exactly. Do not edit casually:
// a change here redefines what the whole tool is expected to emit.

#ifndef MATHPROBE_TESTS_SUPPORT_FIXTURES_HPP_
#define MATHPROBE_TESTS_SUPPORT_FIXTURES_HPP_

#include <array>
#include <vector>

#include "mathprobe/arithmetic.hpp"
#include "mathprobe/contexts.hpp"
#include "mathprobe/puzzle.hpp"

namespace fixtures {

inline constexpr const char* kSystemMessage =
    "Always end your reply with: [FINAL ANSWER] <answer>.";

// ---------------------------------------------------------------------------
// Arithmetic reference set: one conversation per technique.

struct ArithCase {
  const char* label;
  mathprobe::Technique technique;
  const char* detail;  // empty for techniques that take none
  mathprobe::ArithOp op;
  long long a;
  long long b;
  int phrasing_id;
  const char* question;      // bare rendered question
  const char* user_message;  // question wrapped in the technique's context
  const char* response;
  long long extracted;  // value the extractor must recover
  long long truth;
  int edit;         // expected character edit distance to truth
  double rel_edit;  // expected relative edit distance, percent
};

inline const std::array<ArithCase, 5>& arith_cases() {
  using mathprobe::ArithOp;
  using mathprobe::Technique;
  static const std::array<ArithCase, 5> cases = {{
      {"default",
       Technique::kDefault,
       "",
       ArithOp::kMul,
       9163,
       3584,
       0,
       "What is the product of 9163 and 3584?",
       "What is the product of 9163 and 3584?",
       "[FINAL ANSWER] 32843072",
       32843072,
       32840192,
       3,
       37.5},
      {"explanation",
       Technique::kExplanation,
       "",
       ArithOp::kMul,
       4263,
       3224,
       1,
       "Provide the product of 4263 and 3224.",
       "Explain how you understand the following problem: Provide the "
       "product of 4263 and 3224. Then provide an answer to this problem.",
       "This problem is asking for the result of multiplying 4263 by 3224. "
       "To solve this, you simply need to multiply these two numbers "
       "together. [FINAL ANSWER] 13744232",
       13744232,
       13743912,
       3,
       37.5},
      {"impersonation",
       Technique::kImpersonation,
       "Bernhard Riemann",
       ArithOp::kMul,
       3499,
       4691,
       2,
       "What is the product of numbers 3499 and 4691?",
       "Imagine you are the mathematician Bernhard Riemann. As Bernhard "
       "Riemann answer the following problem: What is the product of "
       "numbers 3499 and 4691?",
       "[FINAL ANSWER] The product of numbers 3499 and 4691 is 16411309.",
       16411309,
       16413809,
       2,
       25.0},
      {"restorying",
       Technique::kRestorying,
       "manual",
       ArithOp::kAdd,
       2739,
       1180,
       0,
       "What is the sum of 2739 and 1180?",
       "Write a manual describing how to solve the following problem: What "
       "is the sum of 2739 and 1180?",
       R"fx(Manual: How to Solve the Sum of 2739 and 1180
Step 1: Identify the Numbers
The first step in solving this problem is to identify the numbers that you are adding together. In this case, the numbers are 2739 and 1180.
Step 2: Align the Numbers
Next, you need to align the numbers vertically by their place values. This means that the ones place of each number should be lined up with the ones place of the other number, the tens place with the tens place, and so on. Here's how the numbers should be aligned:
2739
+ 1180
Step 3: Add the Ones Place
Start by adding the numbers in the ones place (the rightmost column). In this case, you are adding 9 and 0. The sum of 9 and 0 is 9.
Step 4: Add the Tens Place
Next, move to the tens place (the second column from the right). Add the numbers in this column. In this case, you are adding 3 and 8. The sum of 3 and 8 is 11. Write down the 1 and carry the other 1 to the next column.
Step 5: Add the Hundreds Place
Now, add the numbers in the hundreds place (the third column from the right), including any number you carried from the tens place. In this case, you are adding 7, 1 (carried from the tens place), and 1. The sum of 7, 1, and 1 is 9.
Step 6: Add the Thousands Place
Finally, add the numbers in the thousands place (the leftmost column). In this case, you are adding 2 and 1. The sum of 2 and 1 is 3.
Step 7: Write Down the Final Answer
Write down the final answer by combining the numbers you got from each column. From right to left, the numbers are 9, 1, 9, and 3. So, the final answer is 3919.
[FINAL ANSWER] The sum of 2739 and 1180 is 3919.)fx",
       3919,
       3919,
       0,
       0.0},
      {"code",
       Technique::kCode,
       "Python",
       ArithOp::kAdd,
       5002,
       6231,
       3,
       "Add 5002 and 6231.",
       "Write code in Python to solve the following problem: Add 5002 and "
       "6231. Then simulate the execution of this code to provide an answer "
       "to this problem.",
       R"fx(Here is the Python code to solve the problem:

#Python code to add 5002 and 6231
def add_numbers(num1, num2):
    return num1 + num2

result = add_numbers(5002, 6231)
print(result)

Simulating the execution of this code:

#Python code to add 5002 and 6231
def add_numbers(num1, num2):
    return num1 + num2

result = add_numbers(5002, 6231)
print(result)

This will output: 11233 [FINAL ANSWER] The sum of 5002 and 6231 is 11233.)fx",
       11233,
       11233,
       0,
       0.0},
  }};
  return cases;
}

// ---------------------------------------------------------------------------
// Puzzle reference set: per technique, a worked example plus the question it
// precedes, with the full assembled user message.

struct PuzzlePart {
  std::array<const char*, 3> names;
  const char* object;
  std::array<mathprobe::HintSpec, 3> hints;
  int target;
  const char* question;  // rendered puzzle text including the final question
};

struct PuzzleCase {
  const char* label;
  mathprobe::Technique technique;
  const char* detail;

  PuzzlePart example;
  int blurb_index;  // into method_blurbs()
  long long example_answer;
  // The impersonation example's system is singular and the code example
  // repeats a hint kind; both are quoted conversations, not generator
  // output, so only the solvable ones carry a solution to check.
  bool example_solvable;
  std::array<long long, 3> example_solution;
  const char* explanation;  // rendered explanation body

  PuzzlePart question;
  std::array<long long, 3> solution;
  long long truth;

  const char* user_message;  // example block + wrapped question
  const char* response;
  long long extracted;
};

inline const std::array<PuzzleCase, 5>& puzzle_cases() {
  using mathprobe::HintKind;
  using mathprobe::HintSpec;
  using mathprobe::Technique;
  static const std::array<PuzzleCase, 5> cases = {{
      // ----- default ------------------------------------------------------
      {"default",
       Technique::kDefault,
       "",
       {{{"Daniel", "Anne", "Elise"}},
        "pencils",
        {{{HintKind::kScaledAll, {0}, 3, 147},
          {HintKind::kScaledAll, {1}, 3, 179},
          {HintKind::kScaledPair, {2, 0}, 2, 143}}},
        2,
        "There are three people named Daniel, Anne and Elise. If Daniel had "
        "3 times the pencils, together they would all have 147 pencils. If "
        "Anne had 3 times the pencils, together they would all have 179 "
        "pencils. If Elise had double the pencils, together with Daniel "
        "they would have 143 pencils. How many pencils does Elise have?"},
       0,
       63,
       true,
       {17, 33, 63},
       "You can transform this puzzle into a system of equations: 3a + b + "
       "c = 147; a + 3b + c = 179; 2c + a = 143;  You can find the answer "
       "by solving the equation for one variable in terms of the other "
       "variables, then substituting found expression into the other "
       "equations. Using this method you will arrive at the answer 63.",
       {{{"Anne", "Daniel", "Charlie"}},
        "dollars",
        {{{HintKind::kPairSum, {0, 1}, 1, 72},
          {HintKind::kPairSum, {0, 2}, 1, 114},
          {HintKind::kAllScaledTotal, {}, 3, 381}}},
        0,
        "There are three people named Anne, Daniel and Charlie. Anne and "
        "Daniel together have 72 dollars. Anne and Charlie together have "
        "114 dollars. If everyone had three times the amount of dollars, "
        "together they would have 381 dollars. How many dollars does Anne "
        "have?"},
       {59, 13, 55},
       59,
       "You will now receive an example puzzle with an explanation how to "
       "solve it. Example puzzle: There are three people named Daniel, Anne "
       "and Elise. If Daniel had 3 times the pencils, together they would "
       "all have 147 pencils. If Anne had 3 times the pencils, together "
       "they would all have 179 pencils. If Elise had double the pencils, "
       "together with Daniel they would have 143 pencils. How many pencils "
       "does Elise have? Explanation: You can transform this puzzle into a "
       "system of equations: 3a + b + c = 147; a + 3b + c = 179; 2c + a = "
       "143;  You can find the answer by solving the equation for one "
       "variable in terms of the other variables, then substituting found "
       "expression into the other equations. Using this method you will "
       "arrive at the answer 63. This was the end of the example, use it to "
       "solve the following puzzle. There are three people named Anne, "
       "Daniel and Charlie. Anne and Daniel together have 72 dollars. Anne "
       "and Charlie together have 114 dollars. If everyone had three times "
       "the amount of dollars, together they would have 381 dollars. How "
       "many dollars does Anne have?",
       R"fx(You can transform this puzzle into a system of equations:
a + d = 72;
a + c = 114;
3a + 3d + 3c = 381;
From the first equation, we can express d in terms of a: d = 72 - a.
Substitute d into the third equation: 3a + 3(72 - a) + 3c = 381;
Simplify the equation: 3a + 216 - 3a + 3c = 381;
Simplify further: 216 + 3c = 381;
Solve for c: c = (381 - 216) / 3 = 55.
Substitute c into the second equation: a + 55 = 114;
Solve for a: a = 114 - 55 = 59.
So, Anne has 59 dollars.

[FINAL ANSWER] Anne has 59 dollars.)fx",
       59},
      // ----- explanation --------------------------------------------------
      {"explanation",
       Technique::kExplanation,
       "",
       {{{"Daniel", "Bob", "Elise"}},
        "dollars",
        {{{HintKind::kScaledAll, {1}, 3, 334},
          {HintKind::kPairSum, {0, 1}, 1, 101},
          {HintKind::kScaledPair, {2, 0}, 2, 192}}},
        0,
        "There are three people named Daniel, Bob and Elise. If Bob had 3 "
        "times the dollars, together they would all have 334 dollars. "
        "Daniel and Bob together have 101 dollars. If Elise had double the "
        "dollars, together with Daniel they would have 192 dollars. How "
        "many dollars does Daniel have?"},
       1,
       26,
       true,
       {26, 75, 83},
       "You can transform this puzzle into a system of equations: a + 3b + "
       "c = 334; a + b = 101; 2c + a = 192;  You can find the answer by "
       "adding or subtracting equations to eliminate one variable and "
       "reduce the system to a smaller one; repeating the process until you "
       "obtain a system with only one variable. Using this method you will "
       "arrive at the answer 26.",
       {{{"Bob", "Elise", "Charlie"}},
        "apples",
        {{{HintKind::kScaledPair, {2, 0}, 2, 240},
          {HintKind::kDifference, {0, 1}, 1, -5},
          {HintKind::kPairVsThird, {0, 1, 2}, 1, 115}}},
        1,
        "There are three people named Bob, Elise and Charlie. If Charlie "
        "had double the apples, together with Bob they would have 240 "
        "apples. Bob has 5 less apples than Elise. Bob and Elise together "
        "have 115 more apples than Charlie. How many apples does Elise "
        "have?"},
       {92, 97, 74},
       97,
       "You will now receive an example puzzle with an explanation how to "
       "solve it. Example puzzle: There are three people named Daniel, Bob "
       "and Elise. If Bob had 3 times the dollars, together they would all "
       "have 334 dollars. Daniel and Bob together have 101 dollars. If "
       "Elise had double the dollars, together with Daniel they would have "
       "192 dollars. How many dollars does Daniel have? Explanation: You "
       "can transform this puzzle into a system of equations: a + 3b + c = "
       "334; a + b = 101; 2c + a = 192;  You can find the answer by adding "
       "or subtracting equations to eliminate one variable and reduce the "
       "system to a smaller one; repeating the process until you obtain a "
       "system with only one variable. Using this method you will arrive at "
       "the answer 26. This was the end of the example, use it to solve the "
       "following puzzle. Explain how you understand the following problem: "
       "There are three people named Bob, Elise and Charlie. If Charlie had "
       "double the apples, together with Bob they would have 240 apples. "
       "Bob has 5 less apples than Elise. Bob and Elise together have 115 "
       "more apples than Charlie. How many apples does Elise have? Then "
       "provide an answer to this problem.",
       R"fx(Understanding: This problem can be solved by setting up a system of equations based on the information given. Let's denote the number of apples Bob, Elise, and Charlie have as B, E, and C respectively.

From the problem, we can derive the following equations:
1. 2C + B = 240 (If Charlie had double the apples, together with Bob they would have 240 apples)
2. B = E - 5 (Bob has 5 less apples than Elise)
3. B + E = C + 115 (Bob and Elise together have 115 more apples than Charlie)
We can solve this system of equations to find the number of apples Elise has.
Solution: Substitute equation 2 into equation 1: 2C + E - 5 = 240, which simplifies to 2C + E = 245.
Substitute equation 2 into equation 3: E - 5 + E = C + 115, which simplifies to 2E - 5 = C + 115.
Now we have a system of two equations with two variables (E and C):
2C + E = 245
2E - 5 = C + 115
Subtract the second equation from the first to eliminate C: 2C + E - (2E - 5) = 245 - 115, which simplifies to 2C - C = 130 + 5, or C = 135.
Substitute C = 135 into equation 2: B = E - 5, which simplifies to B = 135 - 5, or B = 130.
Substitute B = 130 into equation 3: 130 + E = 135 + 115, which simplifies to E = 120.
So, Elise has 120 apples.
[FINAL ANSWER] Elise has 120 apples.)fx",
       120},
      // ----- impersonation ------------------------------------------------
      {"impersonation",
       Technique::kImpersonation,
       "Ada Lovelace",
       {{{"Elise", "Bob", "Anne"}},
        "pencils",
        {{{HintKind::kDifference, {2, 0}, 1, 52},
          {HintKind::kScaledAll, {0}, 3, 178},
          {HintKind::kScaledAll, {2}, 3, 282}}},
        0,
        "There are three people named Elise, Bob and Anne. Anne has 52 more "
        "pencils than Elise. If Elise had 3 times the pencils, together "
        "they would all have 178 pencils. If Anne had 3 times the pencils, "
        "together they would all have 282 pencils. How many pencils does "
        "Elise have?"},
       0,
       19,
       false,
       {0, 0, 0},
       "You can transform this puzzle into a system of equations: c - a = "
       "52; 3a + b + c = 178; a + b + 3c = 282;  You can find the answer by "
       "solving the equation for one variable in terms of the other "
       "variables, then substituting found expression into the other "
       "equations. Using this method you will arrive at the answer 19.",
       {{{"Charlie", "Daniel", "Bob"}},
        "apples",
        {{{HintKind::kScaledPair, {1, 2}, 2, 52},
          {HintKind::kScaledAll, {2}, 3, 71},
          {HintKind::kDifference, {1, 2}, 1, 14}}},
        1,
        "There are three people named Charlie, Daniel and Bob. If Daniel "
        "had double the apples, together with Bob they would have 52 "
        "apples. If Bob had 3 times the apples, together they would all "
        "have 71 apples. Daniel has 14 more apples than Bob. How many "
        "apples does Daniel have?"},
       {25, 22, 8},
       22,
       "You will now receive an example puzzle with an explanation how to "
       "solve it. Example puzzle: There are three people named Elise, Bob "
       "and Anne. Anne has 52 more pencils than Elise. If Elise had 3 times "
       "the pencils, together they would all have 178 pencils. If Anne had "
       "3 times the pencils, together they would all have 282 pencils. How "
       "many pencils does Elise have? Explanation: You can transform this "
       "puzzle into a system of equations: c - a = 52; 3a + b + c = 178; a "
       "+ b + 3c = 282;  You can find the answer by solving the equation "
       "for one variable in terms of the other variables, then substituting "
       "found expression into the other equations. Using this method you "
       "will arrive at the answer 19. This was the end of the example, use "
       "it to solve the following puzzle. Imagine you are the mathematician "
       "Ada Lovelace. As Ada Lovelace answer the following problem: There "
       "are three people named Charlie, Daniel and Bob. If Daniel had "
       "double the apples, together with Bob they would have 52 apples. If "
       "Bob had 3 times the apples, together they would all have 71 apples. "
       "Daniel has 14 more apples than Bob. How many apples does Daniel "
       "have?",
       R"fx(You can transform this puzzle into a system of equations:
2d + b = 52;
d + 3b + c = 71;
d - b = 14;
You can find the answer by solving the equation for one variable in terms of the other variables.
From the third equation, we can express d in terms of b: d = b + 14.
Substitute d into the first equation: 2(b + 14) + b = 52, which simplifies to 3b + 28 = 52. Solving for b, we get b = 8.
Substitute b = 8 into the equation d = b + 14, we get d = 8 + 14 = 22.
So, Daniel has 22 apples.
[FINAL ANSWER] Daniel has 22 apples.)fx",
       22},
      // ----- restorying ---------------------------------------------------
      {"restorying",
       Technique::kRestorying,
       "children story",
       {{{"Daniel", "Bob", "Elise"}},
        "crayons",
        {{{HintKind::kPairVsThird, {1, 2, 0}, 1, 140},
          {HintKind::kDifference, {0, 1}, 1, -53},
          {HintKind::kPairSum, {0, 2}, 1, 92}}},
        0,
        "There are three people named Daniel, Bob and Elise. Bob and Elise "
        "together have 140 more crayons than Daniel. Daniel has 53 less "
        "crayons than Bob. Daniel and Elise together have 92 crayons. How "
        "many crayons does Daniel have?"},
       2,
       5,
       true,
       {5, 58, 87},
       "You can transform this puzzle into a system of equations: b + c - "
       "a = 140; a - b = -53; a + c = 92;  You can find the answer by "
       "starting with an initial guess for the solution and iteratively "
       "improving your guess until it converges to the actual solution. "
       "Using this method you will arrive at the answer 5.",
       {{{"Bob", "Elise", "Charlie"}},
        "apples",
        {{{HintKind::kTotal, {}, 1, 83},
          {HintKind::kScaledAll, {2}, 3, 129},
          {HintKind::kScaledPair, {2, 0}, 2, 76}}},
        1,
        "There are three people named Bob, Elise and Charlie. Together they "
        "have 83 apples. If Charlie had 3 times the apples, together they "
        "would all have 129 apples. If Charlie had double the apples, "
        "together with Bob they would have 76 apples. How many apples does "
        "Elise have?"},
       {30, 30, 23},
       30,
       "You will now receive an example puzzle with an explanation how to "
       "solve it. Example puzzle: There are three people named Daniel, Bob "
       "and Elise. Bob and Elise together have 140 more crayons than "
       "Daniel. Daniel has 53 less crayons than Bob. Daniel and Elise "
       "together have 92 crayons. How many crayons does Daniel have? "
       "Explanation: You can transform this puzzle into a system of "
       "equations: b + c - a = 140; a - b = -53; a + c = 92;  You can find "
       "the answer by starting with an initial guess for the solution and "
       "iteratively improving your guess until it converges to the actual "
       "solution. Using this method you will arrive at the answer 5. This "
       "was the end of the example, use it to solve the following puzzle. "
       "Write a children story describing how to solve the following "
       "problem: There are three people named Bob, Elise and Charlie. "
       "Together they have 83 apples. If Charlie had 3 times the apples, "
       "together they would all have 129 apples. If Charlie had double the "
       "apples, together with Bob they would have 76 apples. How many "
       "apples does Elise have?",
       R"fx(Once upon a time, in a small town named Applewood, lived three best friends named Bob, Elise, and Charlie. They loved apples and would often collect them from the apple trees in their backyard. One day, they decided to count their apples and found out they had 83 in total.

Charlie, being the mischievous one, pondered, "What if I had three times the apples I currently have? How many would we all have then?" After some calculations, they realized they would have 129 apples in that scenario.

Bob, always eager to challenge, speculated, "What if Charlie had double the apples? What would our total be then?" After more calculations, they found out that, in that case, he and Charlie together would have 76 apples.

Elise, with her sharp mind, started piecing the information together. Knowing the total apples was 83 and using the clues from Charlie and Bob, she calculated that if Charlie had three times the apples, he would have an additional 46 apples, which means his current count was 23. From Bob's clue, she figured out that Bob had 30 apples. Thus, subtracting Bob and Charlie's apples from the total, she deduced she had 30 apples.

She shared her findings with Bob and Charlie, who were both impressed with her deduction skills. The story ends with the trio celebrating their collective wit by baking apple pies.

[FINAL ANSWER] Elise has 30 apples.)fx",
       30},
      // ----- code ---------------------------------------------------------
      {"code",
       Technique::kCode,
       "Java",
       {{{"Daniel", "Bob", "Anne"}},
        "pencils",
        {{{HintKind::kPairVsThird, {0, 2, 1}, 1, -31},
          {HintKind::kPairVsThird, {1, 2, 0}, 1, 135},
          {HintKind::kPairVsThird, {0, 1, 2}, 1, 59}}},
        2,
        "There are three people named Daniel, Bob and Anne. Daniel and Anne "
        "together have 31 less pencils than Bob. Bob and Anne together have "
        "135 more pencils than Daniel. Daniel and Bob together have 59 more "
        "pencils than Anne. How many pencils does Anne have?"},
       2,
       52,
       true,
       {14, 97, 52},
       "You can transform this puzzle into a system of equations: a + c - "
       "b = -31; b + c - a = 135; a + b - c = 59;  You can find the answer "
       "by starting with an initial guess for the solution and iteratively "
       "improving your guess until it converges to the actual solution. "
       "Using this method you will arrive at the answer 52.",
       {{{"Elise", "Daniel", "Charlie"}},
        "books",
        {{{HintKind::kScaledAll, {1}, 3, 137},
          {HintKind::kDifference, {2, 0}, 1, 30},
          {HintKind::kPairSum, {1, 2}, 1, 73}}},
        0,
        "There are three people named Elise, Daniel and Charlie. If Daniel "
        "had 3 times the books, together they would all have 137 books. "
        "Charlie has 30 more books than Elise. Daniel and Charlie together "
        "have 73 books. How many books does Elise have?"},
       {22, 21, 52},
       22,
       "You will now receive an example puzzle with an explanation how to "
       "solve it. Example puzzle: There are three people named Daniel, Bob "
       "and Anne. Daniel and Anne together have 31 less pencils than Bob. "
       "Bob and Anne together have 135 more pencils than Daniel. Daniel and "
       "Bob together have 59 more pencils than Anne. How many pencils does "
       "Anne have? Explanation: You can transform this puzzle into a system "
       "of equations: a + c - b = -31; b + c - a = 135; a + b - c = 59;  "
       "You can find the answer by starting with an initial guess for the "
       "solution and iteratively improving your guess until it converges to "
       "the actual solution. Using this method you will arrive at the "
       "answer 52. This was the end of the example, use it to solve the "
       "following puzzle. Write code in Java to solve the following "
       "problem: There are three people named Elise, Daniel and Charlie. If "
       "Daniel had 3 times the books, together they would all have 137 "
       "books. Charlie has 30 more books than Elise. Daniel and Charlie "
       "together have 73 books. How many books does Elise have? Then "
       "simulate the execution of this code to provide an answer to this "
       "problem.",
       R"fx(Here is the Java code to solve the problem:
public class Main {
    public static void main(String[] args) {
        int totalBooks = 137;
        int charlieMoreBooks = 30;
        int danielCharlieBooks = 73;

        int eliseBooks = (totalBooks - 3 * danielCharlieBooks + charlieMoreBooks) / 4;
        System.out.println("[FINAL ANSWER] Elise has " + eliseBooks + " books.");
    }
}

Simulating the execution of this code:
1. The total number of books if Daniel had 3 times the books is 137.
2. Charlie has 30 more books than Elise.
3. Daniel and Charlie together have 73 books.
The equation to solve this problem is:
'eliseBooks = (totalBooks - 3 * danielCharlieBooks + charlieMoreBooks) / 4;'
Substituting the given values into the equation:
'eliseBooks = (137 - 3 * 73 + 30) / 4;'
Solving the equation gives: 'eliseBooks = 8;'
So, [FINAL ANSWER] Elise has 8 books.)fx",
       8},
  }};
  return cases;
}

// Builds the library-side worked example for a puzzle case, bypassing the
// generator so the quoted singular and repeated-kind examples stay usable.
inline mathprobe::WorkedExample worked_example_for(const PuzzleCase& c) {
  mathprobe::WorkedExample ex;
  ex.puzzle.names = {c.example.names[0], c.example.names[1],
                     c.example.names[2]};
  ex.puzzle.object = c.example.object;
  ex.puzzle.hints = c.example.hints;
  for (int i = 0; i < 3; ++i) {
    mathprobe::EquationRow row = hint_to_equation(c.example.hints[i]);
    ex.puzzle.system.a[i] = row.coeffs;
    ex.puzzle.system.b[i] = row.rhs;
  }
  ex.puzzle.target = c.example.target;
  ex.puzzle.ground_truth = c.example_answer;
  if (c.example_solvable) ex.puzzle.solution = c.example_solution;
  ex.puzzle.question_text = c.example.question;
  ex.method_blurb = mathprobe::method_blurbs()[static_cast<std::size_t>(
      c.blurb_index)];
  ex.explanation_text = c.explanation;
  return ex;
}

}  // namespace fixtures

#endif  // MATHPROBE_TESTS_SUPPORT_FIXTURES_HPP_
