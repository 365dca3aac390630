def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def guard(values):
    if not values:
        return 0
    return values[-1]
