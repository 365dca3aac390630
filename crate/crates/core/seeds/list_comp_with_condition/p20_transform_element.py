def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def halves_of_evens(values):
    halves = []
    for v in values:
        if v % 2 == 0:
            halves.append(v // 2)
    return halves
# probe: halves_of_evens([2, 3, 10])
