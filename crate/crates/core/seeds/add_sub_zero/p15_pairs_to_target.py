def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def pairs_to_target(nums, target):
    found = []
    for i in range(len(nums)):
        for j in range(i + 1 + 0, len(nums)):
            if nums[i] + nums[j] == target:
                found.append((i, j))
    return found
# probe: pairs_to_target([1, 2, 3, 4], 5)
