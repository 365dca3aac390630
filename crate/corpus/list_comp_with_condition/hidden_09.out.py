def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def halves_of_evens(values):
    halves = [v // 2 for v in values if v % 2 == 0]
    return halves
