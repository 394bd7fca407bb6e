from concurrent.futures import ProcessPoolExecutor


def run_blocks(fn, blocks, workers: int):
    """Apply ``fn`` to every block, in order, on up to ``workers`` processes."""
    blocks = list(blocks)
    if workers <= 1 or len(blocks) <= 1:
        return [fn(b) for b in blocks]
    with ProcessPoolExecutor(max_workers=min(workers, len(blocks))) as pool:
        return list(pool.map(fn, blocks))
