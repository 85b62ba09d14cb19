import asyncio
import json
import logging
from functools import wraps

logger = logging.getLogger("nano-kschur")


def always_get_an_event_loop() -> asyncio.AbstractEventLoop:
    try:
        loop = asyncio.get_event_loop()
    except RuntimeError:
        logger.info("No event loop in this thread, creating one")
        loop = asyncio.new_event_loop()
        asyncio.set_event_loop(loop)
    return loop


def parse_int_list(content: str) -> tuple[int, ...]:
    """Parse a comma-separated list of integers such as ``3,3,2,1``.

    Empty input gives the empty tuple, so ``--weight ""`` means the empty weight.
    """
    content = content.strip()
    if not content:
        return ()
    try:
        return tuple(int(piece) for piece in content.split(","))
    except ValueError as e:
        raise ValueError(f"Expected comma-separated integers, got {content!r}") from e


def format_int_list(values) -> str:
    return ",".join(str(v) for v in values)


def write_json(json_obj, file_name):
    with open(file_name, "w", encoding="utf-8") as f:
        json.dump(json_obj, f, indent=2, ensure_ascii=False)


# Decorators ------------------------------------------------------------------------
def limit_async_func_call(max_size: int, wait_seconds: float = 0.0001):
    """Cap how many calls of an async function run at once; verification cases share one cap per suite."""

    def decorator(func):
        __current_size = 0

        @wraps(func)
        async def wait_func(*args, **kwargs):
            nonlocal __current_size
            while __current_size >= max_size:
                await asyncio.sleep(wait_seconds)
            __current_size += 1
            try:
                return await func(*args, **kwargs)
            finally:
                __current_size -= 1

        return wait_func

    return decorator
