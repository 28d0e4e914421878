//! Reading instance documents and writing solve reports in the JSON formats
//! the command line uses.
//!
//! cargo run -p dtso --example json_reports

use dtso::{
    parse_instance, parse_report, serialize_report, solve_schedule, SchedulingInstance,
    SolveReport, Witness,
};

fn main() -> Result<(), dtso::Error> {
    // `q` is optional and defaults to the number of paths.
    let inst: SchedulingInstance =
        parse_instance(br#"{"paths":[{"ci":2,"ps":3},{"ci":0,"ps":5},{"ci":4,"ps":1}],"n":5}"#)?;
    let result = solve_schedule(&inst)?;
    let report = SolveReport {
        objective: result.makespan,
        witness: Witness::Schedule {
            counts: result.counts,
        },
        verified: None,
    };
    let json = serialize_report(&report);
    println!("{json}");
    assert_eq!(parse_report(json.as_bytes())?, report);

    match parse_instance::<SchedulingInstance>(br#"{"paths":[],"n":1}"#) {
        Err(err) => println!("rejected: {err}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
