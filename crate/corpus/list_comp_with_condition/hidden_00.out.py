def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def numeric(tokens):
    nums = [int(t) for t in tokens if t.isdigit()]
    return nums
