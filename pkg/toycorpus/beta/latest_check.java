public class LatestCheck {
}
