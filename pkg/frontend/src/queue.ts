// FIFO single-flight queue: at most one request in flight per session,
// later clicks start strictly in click order, never reordered.

export class FifoQueue {
  private tail: Promise<unknown> = Promise.resolve();
  private depth = 0;

  enqueue<T>(task: () => Promise<T>): Promise<T> {
    this.depth += 1;
    const run = this.tail.then(task);
    this.tail = run
      .catch(() => undefined)
      .finally(() => {
        this.depth -= 1;
      });
    return run;
  }

  get pending(): number {
    return this.depth;
  }

  async drained(): Promise<void> {
    // settles once everything enqueued so far has finished
    let snapshot: Promise<unknown>;
    do {
      snapshot = this.tail;
      await snapshot.catch(() => undefined);
    } while (snapshot !== this.tail);
  }
}
