//! Fan-out of a weak-order [`Search`] over worker threads.
//!
//! Workers pull task indices from a shared counter; tallies are merged in task
//! order afterwards, so the result is identical for any worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use lexraf_core::characterization::Tally;
use lexraf_core::Search;

pub fn run_search(search: &Search, workers: usize) -> Tally {
    let workers = workers.max(1).min(search.task_count().max(1));
    if workers == 1 {
        return search.run();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Tally>>> = Mutex::new(vec![None; search.task_count()]);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let task = next.fetch_add(1, Ordering::Relaxed);
                if task >= search.task_count() {
                    break;
                }
                let tally = search.run_task(task);
                slots.lock().expect("no worker panicked")[task] = Some(tally);
            });
        }
    });
    let mut total = Tally::default();
    for tally in slots.into_inner().expect("no worker panicked") {
        total.merge(tally.expect("every task ran"));
    }
    total
}
