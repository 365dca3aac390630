def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def numeric(tokens):
    nums = []
    for t in tokens:
        if t.isdigit():
            nums.append(int(t))
    return nums
# probe: numeric(['12', 'x', '7'])
