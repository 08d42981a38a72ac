//! Deterministic fan-out over a fixed task list.
//!
//! Workers pull tasks from a shared cursor and write each result into the
//! slot matching its task index, so the merged output order depends only on
//! the task order, never on scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Runs `run` over every task on up to `threads` workers, returning results
/// in task order. `threads <= 1` degenerates to a plain sequential map.
pub fn run_ordered<T, R, F>(tasks: Vec<T>, threads: usize, run: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    let count = tasks.len();
    if threads <= 1 || count <= 1 {
        return tasks.into_iter().map(run).collect();
    }

    let cursor = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<T>>> = tasks.into_iter().map(|t| Mutex::new(Some(t))).collect();
    let results: Vec<Mutex<Option<R>>> = (0..count).map(|_| Mutex::new(None)).collect();

    std::thread::scope(|scope| {
        for _ in 0..threads.min(count) {
            scope.spawn(|| loop {
                let idx = cursor.fetch_add(1, Ordering::Relaxed);
                if idx >= count {
                    break;
                }
                let task = slots[idx]
                    .lock()
                    .expect("task slot poisoned")
                    .take()
                    .expect("each task is taken once");
                let result = run(task);
                *results[idx].lock().expect("result slot poisoned") = Some(result);
            });
        }
    });

    results
        .into_iter()
        .map(|slot| {
            slot.into_inner()
                .expect("result slot poisoned")
                .expect("every task produced a result")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_task_order() {
        let tasks: Vec<usize> = (0..100).collect();
        let sequential = run_ordered(tasks.clone(), 1, |t| t * 2);
        let parallel = run_ordered(tasks, 4, |t| t * 2);
        assert_eq!(sequential, parallel);
        assert_eq!(parallel[7], 14);
    }

    #[test]
    fn handles_empty_and_single_task_lists() {
        assert_eq!(run_ordered(Vec::<usize>::new(), 8, |t| t), Vec::<usize>::new());
        assert_eq!(run_ordered(vec![5], 8, |t| t + 1), vec![6]);
    }
}
