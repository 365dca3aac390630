def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def mean(values):
    if not values:
        return 0
    ratio = 1 / 4
    return sum(values) * ratio
