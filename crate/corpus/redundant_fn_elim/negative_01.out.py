def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def consume(x):
    pass
def run(values):
    consume(values.pop())
    return values
