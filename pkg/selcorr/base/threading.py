# -*- coding: utf-8 -*-
"""
Thread pool used for per-fold nuisance fits and Monte Carlo replications
"""
import itertools
import logging
import queue
import threading
import time

from selcorr.base.formatters import human_readable_time_from_seconds as hrts

__copyright__ = "Copyright 2026, selcorr developers"


class Parallel(object):

    """
    A helper class that makes it simpler to run tasks in parallel.  If you
    have multiple tasks you want to run in parallel you need to encapsulate
    them in a single function that accepts a variety of arguments.

    Results are not collected here: callers store them keyed by task
    (e.g. a replication id), so output never depends on completion order.
    """

    def __init__(self, funcs, args_list=None, kwargs_list=None, max_workers=5,
                 timeout=3600, output_interval=None):
        """

        :param funcs: A list of functions to be used by the workers
        :param args_list: A list of tuples of arguments required by each
                          function in `funcs`
        :param kwargs_list: A list of dictionaries of kwargs accepted
                            by each function in `funcs`
        :param max_workers: The maximum number of simultaneous threads
        :param timeout: Seconds to wait for each worker when shutting down
            after an exception
        :param output_interval: Int,
            the interval at which status will be output.
        """
        self.logger = logging.getLogger(__name__)
        if not self.logger.handlers:
            self.logger.addHandler(logging.NullHandler())
        self.funcs = funcs
        self.args_list = args_list if args_list else []
        self.kwargs_list = kwargs_list if kwargs_list else []
        self.max_workers = max(1, int(max_workers))
        self.queue = queue.Queue()
        self.exceptions = queue.Queue()
        self.threads = []
        self.timeout = timeout
        self.keep_running = True
        self.output_interval = output_interval

    def _wrapped(self):
        threading.current_thread().name = "Parallel-Worker-" + \
            threading.current_thread().name
        while self.keep_running:
            try:
                func, args, kwargs = self.queue.get(block=False)
            except queue.Empty:
                break
            self.logger.debug(
                "Running {} with args: {} and kwargs {} with thread {}".format(
                    getattr(func, '__name__', func), args, kwargs,
                    threading.current_thread().name))
            try:
                func(*args, **kwargs)
            except Exception as ex:
                self.keep_running = False
                self.logger.debug("Exception occurred in thread {}".format(
                    threading.current_thread().name), exc_info=True)
                self.exceptions.put(ex)

            self.queue.task_done()

    def _run_inline(self):
        """ max_workers == 1: run in the calling thread, in order """
        for func, args, kwargs in self._tasks():
            func(*args, **kwargs)

    def _tasks(self):
        if (len(self.funcs) < len(self.args_list) or
                len(self.funcs) < len(self.kwargs_list)):
            raise ValueError(
                "List of functions passed into a Parallel object must "
                "be longer or equal in length to the list of args "
                "and/or kwargs passed to the object.  {}, {}, {"
                "}".format(len(self.funcs), len(self.args_list),
                           len(self.kwargs_list)))
        for func, args, kwargs in itertools.zip_longest(
                self.funcs, self.args_list, self.kwargs_list):
            # Flag a common (and confusing) user error:
            if isinstance(args, str):
                msg = "args_list must be list of lists not list of strings"
                raise ValueError(msg)
            yield func, tuple(args or ()), dict(kwargs or {})

    def run_threads(self):
        """
        Call this function to start the worker threads.  They will continue
        running until all args/kwargs are consumed.  This is a blocking call.
        The first exception raised by any task is re-raised here.
        """
        if self.max_workers == 1:
            self._run_inline()
            return
        try:
            for task in self._tasks():
                self.queue.put(task)

            for _ in range(min(self.max_workers, max(1, len(self.funcs)))):
                thread = threading.Thread(target=self._wrapped)
                thread.daemon = True
                thread.start()
                self.threads.append(thread)

            start_time = time.time()
            last_output_time = start_time
            while self.queue.unfinished_tasks:
                # Check if exception has been generated by a thread and raise
                # if found one is found
                try:
                    exc = self.exceptions.get(block=False)
                    self.keep_running = False
                    raise exc
                except queue.Empty:
                    pass
                if self.output_interval is not None:
                    if time.time() - last_output_time > self.output_interval:
                        msg = ("After {} {} tasks pending execution of"
                               " {} total".format(
                                   hrts(time.time() - start_time),
                                   self.queue.qsize(),
                                   len(self.funcs)))
                        self.logger.info(msg)
                        last_output_time = time.time()
                time.sleep(0.05)

        # Ensure all threads will exit regardless of the current
        # state of the main thread
        finally:
            try:
                exc = self.exceptions.get(block=False)
                self.keep_running = False
                # Join all threads to ensure we don't continue
                # without all threads stopping
                for thread in self.threads:
                    thread.join(self.timeout)
                raise exc
            except queue.Empty:
                pass
