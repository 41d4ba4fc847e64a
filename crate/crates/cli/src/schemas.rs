//! Shared `--help` text documenting the JSON Lines schemas each subcommand
//! reads and writes.

pub const PAIRS_SCHEMA: &str = "\
Mapped-pair JSON Lines schema (one object per line):
  {\"schema_version\": 1,
   \"repo_id\": \"...\",
   \"test_class_path\": \"src/test/java/FooTest.java\",
   \"test_case\": {\"name\": \"testRun\", \"body\": \"@Test public void testRun() {...}\"},
   \"focal_class_path\": \"src/main/java/Foo.java\",
   \"focal_method\": {\"name\": \"run\", \"signature\": \"void run()\", \"body\": \"public void run() {...}\"},
   \"class_match\": \"path\" | \"name\",
   \"method_match\": \"name\" | \"unique_call\",
   \"focal_class\": {\"name\", \"constructor_signatures\", \"public_method_signatures\", \"public_field_declarations\"},
   \"context\": {\"level\", \"text\", \"token_count\", \"truncated\"}   (optional, added by `render`)}

A pair's identifier is \"repo_id:test_class_path:test_case.name\".";

pub const CANDIDATES_SCHEMA: &str = "\
Candidate JSON Lines schema (one object per line):
  {\"id\": \"cand-001\",
   \"focal_pair_id\": \"repo:src/test/java/FooTest.java:testRun\",   (optional)
   \"text\": \"@Test public void t() { ... }\",
   \"generator\": \"model-x\"}   (optional)";

pub const VALIDATION_SCHEMA: &str = "\
Validation-record JSON Lines schema (one object per line):
  {\"id\", \"focal_pair_id\"?, \"generator\"?,
   \"syntactically_valid\": bool, \"repaired\": bool,
   \"has_test_annotation\": bool?, \"invokes_focal_method\": bool?,
   \"api_profile\": {\"counts\": {api: n}, \"total\": n}?,
   \"error\": \"...\"?}";

pub const VERDICTS_SCHEMA: &str = "\
Verdict JSON Lines schema (one object per line):
  {\"candidate_id\", \"focal_pair_id\"?,
   \"category\": \"syntax_error\" | \"build_error\" | \"failing_test\" | \"passing_test\",
   \"correct\": bool, \"repaired\": bool, \"reason\"?: \"...\", \"warning\"?: \"...\"}

The four categories are mutually exclusive; correct=true only for passing
tests whose coverage reaches the focal method.";

pub const LEVELS_HELP: &str = "\
Context levels: fm, fm+fc, fm+fc+c, fm+fc+c+m, fm+fc+c+m+f
  fm            focal method source only
  fm+fc         + focal class name wrapper
  fm+fc+c       + constructor signatures
  fm+fc+c+m     + other public method signatures
  fm+fc+c+m+f   + public field declarations";
