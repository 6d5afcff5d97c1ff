use mixed_moore::cli::{run, CAP_ENV};

fn search(n: &str) -> i32 {
    let args = [
        "mixed-moore",
        "search",
        "-r",
        "1",
        "-z",
        "1",
        "-k",
        "3",
        "-n",
        n,
    ];
    run(args, &mut Vec::new(), &mut Vec::new())
}

// One test only: the variable is process-wide.
#[test]
fn cap_comes_from_the_environment() {
    std::env::remove_var(CAP_ENV);
    assert_eq!(search("20"), 4);
    assert_eq!(search("10"), 0);
    std::env::set_var(CAP_ENV, "8");
    assert_eq!(search("10"), 4);
    std::env::set_var(CAP_ENV, "24");
    assert_eq!(search("17"), 0);
    std::env::set_var(CAP_ENV, "lots");
    assert_eq!(search("10"), 2);
    std::env::remove_var(CAP_ENV);
}
